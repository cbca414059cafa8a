//! Verification reports (`design-report/1`).
//!
//! A report lists detected parameters, pass/fail checks and informational
//! properties. Only checks decide the overall verdict. Every failed check
//! carries a [`Witness`].

use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use crate::catalog_io::{self, Document};
use crate::classical::{check_identities, search_designs, verify_hom, ClassicalDesign, HomPair, SearchParams};
use crate::cpmaps::{self, Algebra, CpMap};
use crate::numkit::{ComplexMatrix, Tolerance};
use crate::quantum::{check_identities_q, QuantumDesign};
use crate::{Error, Result};

pub const REPORT_SCHEMA: &str = "design-report/1";

/// Orientation used for the counting identities of a map `A → D`.
pub const ORIENTATION_NOTE: &str =
    "Counting identities for a design A -> D (A the block algebra, D the point algebra) \
are checked as k·dim(A) = r·dim(D) and λ(dim(D)−1) = r(k−1). The form with dim(A) and dim(D) exchanged \
fails on non-symmetric designs (for the complete design on 4 points with blocks of size 2 it would require 2·4 = 3·6) \
and is not used.";

/// Where a failed check went wrong.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// Matrix cell.
    Cell {
        row: usize,
        col: usize,
    },
    /// Pair of points or projectors.
    Pair {
        i: usize,
        j: usize,
    },
    Eigenvalue {
        value: f64,
    },
    /// Point, block or projector index.
    Index {
        index: usize,
    },
    /// Both sides of an identity, exact decimal text.
    Values {
        lhs: String,
        rhs: String,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub residual: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

impl Check {
    pub fn exact(name: impl Into<String>, pass: bool, witness: Option<Witness>, detail: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            pass,
            residual: None,
            tolerance: None,
            witness: if pass { None } else { witness },
            detail: detail.into(),
        }
    }

    /// Passes iff `residual ≤ tolerance`.
    pub fn within(
        name: impl Into<String>,
        residual: f64,
        tolerance: f64,
        witness: Option<Witness>,
        detail: impl Into<String>,
    ) -> Self {
        let pass = residual <= tolerance;
        Self {
            name: name.into(),
            pass,
            residual: Some(residual),
            tolerance: Some(tolerance),
            witness: if pass { None } else { witness },
            detail: detail.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DesignReport {
    pub schema: String,
    pub command: String,
    /// `sha256:<hex>` over the canonical documents of the inputs, each
    /// prefixed by its byte length.
    pub input_digest: String,
    pub parameters: Map<String, Value>,
    pub checks: Vec<Check>,
    pub properties: Vec<Check>,
    pub notes: Vec<String>,
    pub tool_version: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub designs: Option<Vec<Value>>,
}

/// Digest of a list of inputs. Each input is hashed as its length (u64,
/// little endian) followed by its bytes.
pub fn input_digest<B: AsRef<[u8]>>(inputs: &[B]) -> String {
    let mut h = Sha256::new();
    for input in inputs {
        let bytes = input.as_ref();
        h.update((bytes.len() as u64).to_le_bytes());
        h.update(bytes);
    }
    format!("sha256:{}", hex::encode(h.finalize()))
}

impl DesignReport {
    pub fn new<B: AsRef<[u8]>>(command: &str, inputs: &[B]) -> Self {
        Self {
            schema: REPORT_SCHEMA.to_string(),
            command: command.to_string(),
            input_digest: input_digest(inputs),
            parameters: Map::new(),
            checks: Vec::new(),
            properties: Vec::new(),
            notes: Vec::new(),
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            designs: None,
        }
    }

    /// Every check passed. Properties are ignored.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn property(&self, name: &str) -> Option<&Check> {
        self.properties.iter().find(|c| c.name == name)
    }

    fn set(&mut self, key: &str, value: Value) {
        self.parameters.insert(key.to_string(), value);
    }

    pub fn to_json(&self) -> String {
        catalog_io::to_canonical(&serde_json::to_value(self).expect("report serializes"))
    }

    pub fn from_json(text: &str) -> Result<Self> {
        match catalog_io::parse_document(text)? {
            Document::Report(r) => Ok(r),
            other => Err(Error::SchemaMismatch {
                expected: REPORT_SCHEMA.into(),
                found: other.schema().into(),
            }),
        }
    }

    /// Plain-text rendering for terminals.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("command: {}\ninput:   {}\n", self.command, self.input_digest));
        if !self.parameters.is_empty() {
            out.push_str("parameters:\n");
            for (k, v) in &self.parameters {
                out.push_str(&format!("  {k} = {v}\n"));
            }
        }
        let line = |out: &mut String, tag: &str, c: &Check| {
            out.push_str(&format!("  [{tag}] {}", c.name));
            if let (Some(r), Some(t)) = (c.residual, c.tolerance) {
                out.push_str(&format!("  residual {r:.3e} (tol {t:.3e})"));
            }
            if !c.detail.is_empty() {
                out.push_str(&format!("  {}", c.detail));
            }
            if let Some(w) = &c.witness {
                out.push_str(&format!("  witness {}", serde_json::to_string(w).expect("serializes")));
            }
            out.push('\n');
        };
        out.push_str("checks:\n");
        for c in &self.checks {
            line(&mut out, if c.pass { "PASS" } else { "FAIL" }, c);
        }
        if !self.properties.is_empty() {
            out.push_str("properties:\n");
            for c in &self.properties {
                line(&mut out, if c.pass { "yes " } else { "no  " }, c);
            }
        }
        if let Some(designs) = &self.designs {
            out.push_str(&format!("designs: {}\n", designs.len()));
            for d in designs {
                out.push_str(&format!("  {d}\n"));
            }
        }
        for n in &self.notes {
            out.push_str(&format!("note: {n}\n"));
        }
        out.push_str(&format!("verdict: {}\n", if self.passed() { "PASS" } else { "FAIL" }));
        out
    }
}

fn first_different(values: &[u64]) -> Option<usize> {
    values.iter().position(|&x| x != values[0])
}

fn opt<T: Into<Value>>(x: Option<T>) -> Value {
    x.map_or(Value::Null, Into::into)
}

/// Classification and counting identities of an incidence matrix. With
/// `block`, uniformity, regularity and balance are required checks;
/// otherwise they are properties.
pub fn classical_report(d: &ClassicalDesign, block: bool) -> Result<DesignReport> {
    let command = if block {
        "verify-classical --block"
    } else {
        "verify-classical"
    };
    let mut rep = DesignReport::new(command, &[catalog_io::classical_to_json(d)]);
    let p = d.classify()?;
    rep.set("v", d.v().into());
    rep.set("b", d.b().into());
    rep.set("k", opt(p.k));
    rep.set("r", opt(p.r));
    rep.set("lambda", opt(p.lambda));
    rep.set("symmetric", p.symmetric.into());
    rep.set("zero_one", d.is_zero_one().into());

    let chi = d.incidence();
    let cols = chi.col_sums()?;
    let rows = chi.row_sums()?;
    let mut structure = vec![
        Check::exact(
            "k-uniform",
            p.k.is_some(),
            first_different(&cols).map(|index| Witness::Index { index }),
            "every block has the same size",
        ),
        Check::exact(
            "r-regular",
            p.r.is_some(),
            first_different(&rows).map(|index| Witness::Index { index }),
            "every point lies in the same number of blocks",
        ),
    ];
    if d.v() >= 2 {
        let g = d.gram()?;
        let lambda = g.get(0, 1);
        let defect = (0..d.v())
            .flat_map(|i| (i + 1..d.v()).map(move |j| (i, j)))
            .find(|&(i, j)| g.get(i, j) != lambda);
        structure.push(Check::exact(
            "λ-balanced",
            defect.is_none(),
            defect.map(|(i, j)| Witness::Pair { i, j }),
            "every pair of points lies in the same number of blocks",
        ));
    }
    if block {
        rep.checks.append(&mut structure);
        if !d.is_zero_one() {
            let (row, col) = (0..d.v())
                .flat_map(|i| (0..d.b()).map(move |j| (i, j)))
                .find(|&(i, j)| chi.get(i, j) > 1)
                .expect("non 0/1 entry exists");
            rep.checks.push(Check::exact(
                "0/1 incidence",
                false,
                Some(Witness::Cell { row, col }),
                "block designs need 0/1 entries",
            ));
        }
    } else {
        rep.properties.append(&mut structure);
    }

    if p.k.is_some() && p.r.is_some() {
        for c in check_identities(d.v() as u64, d.b() as u64, &p)? {
            rep.checks.push(Check::exact(
                c.name,
                c.pass,
                Some(Witness::Values {
                    lhs: c.lhs.to_string(),
                    rhs: c.rhs.to_string(),
                }),
                format!("{} = {}", c.lhs, c.rhs),
            ));
        }
    } else {
        rep.notes
            .push("k or r is undefined, so the counting identities do not apply.".into());
    }
    rep.notes.push(ORIENTATION_NOTE.into());
    Ok(rep)
}

/// Projector validation, classification and counting identities.
pub fn quantum_report(qd: &QuantumDesign, tol: Tolerance) -> Result<DesignReport> {
    let mut rep = DesignReport::new("verify-quantum", &[catalog_io::quantum_to_json(qd)]);
    rep.set("v", qd.v().into());
    rep.set("b", qd.b().into());
    rep.set("abs_eps", tol.abs_eps.into());
    rep.set("rel_eps", tol.rel_eps.into());

    let validation = qd.validate(tol)?;
    let worst = validation
        .projectors
        .iter()
        .map(|p| p.hermiticity_residual.max(p.idempotency_residual))
        .fold(0.0, f64::max);
    rep.checks.push(Check {
        name: "projectors".into(),
        pass: validation.pass,
        residual: Some(worst),
        tolerance: Some(tol.bound(1.0)),
        witness: validation.first_failure().map(|index| Witness::Index { index }),
        detail: "p = p† and p² = p".into(),
    });
    if !validation.pass {
        return Ok(rep);
    }

    let pairs = qd.pair_traces()?;
    if let Some(((i, j), im)) = pairs.max_imaginary() {
        rep.checks.push(Check::within(
            "Tr(p_i p_j) real",
            im,
            tol.bound(1.0),
            Some(Witness::Pair { i, j }),
            "",
        ));
    }

    let p = qd.classify(tol)?;
    rep.set("r", opt(p.r));
    rep.set("k", opt(p.k));
    rep.set("degree", p.degree.into());
    rep.set("lambda_set", p.lambda_set.clone().into());
    rep.set("commutative", p.commutative.into());

    let traces: Vec<f64> = qd
        .projectors()
        .iter()
        .map(|m| m.trace().map(|t| t.re))
        .collect::<Result<_>>()?;
    let bad_trace = traces.iter().position(|t| !tol.eq(*t, traces[0].round()));
    rep.checks.push(Check::exact(
        "r-regular",
        p.r.is_some(),
        Some(Witness::Index {
            index: bad_trace.unwrap_or(0),
        }),
        "every Tr(p_i) equals one natural number r",
    ));
    let (k_fit, k_residual) = qd.uniformity_fit()?;
    let deviation = qd
        .projector_sum()
        .sub(&ComplexMatrix::identity(qd.b()).scale(crate::Complex64::new(k_fit, 0.0)))?;
    let b = qd.b();
    let worst = (0..b * b)
        .max_by(|&x, &y| {
            deviation
                .get(x / b, x % b)
                .norm()
                .total_cmp(&deviation.get(y / b, y % b).norm())
        })
        .unwrap_or(0);
    rep.checks.push(Check::within(
        "k-uniform",
        k_residual,
        tol.bound(k_fit),
        Some(Witness::Cell {
            row: worst / b,
            col: worst % b,
        }),
        "Σ p_i = k·I",
    ));
    if p.k.is_some() && p.r.is_some() {
        for c in check_identities_q(qd.v(), qd.b(), &p, tol)? {
            rep.checks.push(Check::within(
                c.name,
                (c.lhs - c.rhs).abs(),
                tol.bound(c.lhs.abs().max(c.rhs.abs())),
                Some(Witness::Values {
                    lhs: c.lhs.to_string(),
                    rhs: c.rhs.to_string(),
                }),
                format!("{} = {}", c.lhs, c.rhs),
            ));
        }
    }

    let noncommuting = qd.first_noncommuting_pair(tol)?;
    rep.properties.push(Check::exact(
        "commutative",
        noncommuting.is_none(),
        noncommuting.map(|(i, j)| Witness::Pair { i, j }),
        "",
    ));
    let spread = pairs.values.iter().map(|(_, t)| t.re).fold(f64::NEG_INFINITY, f64::max)
        - pairs.values.iter().map(|(_, t)| t.re).fold(f64::INFINITY, f64::min);
    rep.properties.push(Check::exact(
        "λ-balanced",
        p.degree <= 1,
        pairs.min_real().map(|((i, j), _)| Witness::Pair { i, j }),
        if pairs.values.is_empty() {
            String::new()
        } else {
            format!("Tr(p_i p_j) spread {spread:e}")
        },
    ));
    rep.notes.push(ORIENTATION_NOTE.into());
    Ok(rep)
}

fn algebra_json(a: Algebra) -> Value {
    match a {
        Algebra::Commutative(n) => json!({"kind": "commutative", "n": n}),
        Algebra::Matrix(n) => json!({"kind": "matrix", "n": n}),
    }
}

fn worst_asymmetry(c: &ComplexMatrix) -> (usize, usize, f64) {
    let n = c.rows();
    let mut worst = (0, 0, 0.0);
    for x in 0..n {
        for y in 0..n {
            let d = (c.get(x, y) - c.get(y, x).conj()).norm();
            if d > worst.2 {
                worst = (x, y, d);
            }
        }
    }
    worst
}

/// Complete positivity, design conditions under both readings of the
/// matrix, and trace preservation.
///
/// Required checks: Choi positivity, uniformity and regularity under the
/// superoperator reading. λ-balance and trace preservation are reported as
/// properties.
pub fn cpmap_report(f: &CpMap, tol: Tolerance) -> Result<DesignReport> {
    let mut rep = DesignReport::new("verify-cpmap", &[catalog_io::cpmap_to_json(f)]);
    rep.set("in", algebra_json(f.in_alg()));
    rep.set("out", algebra_json(f.out_alg()));
    rep.set("convention", "superoperator".into());
    rep.set("abs_eps", tol.abs_eps.into());
    rep.set("rel_eps", tol.rel_eps.into());

    let c = cpmaps::choi(f).m;
    let cp_scale = c.max_abs();
    match cpmaps::is_cp(f, tol) {
        Ok(v) => {
            rep.set("choi_min_eigenvalue", v.min_eigenvalue.into());
            rep.checks.push(Check {
                name: "completely positive".into(),
                pass: v.completely_positive,
                residual: Some((-v.min_eigenvalue).max(0.0)),
                tolerance: Some(tol.bound(cp_scale)),
                witness: (!v.completely_positive).then_some(Witness::Eigenvalue {
                    value: v.min_eigenvalue,
                }),
                detail: "Choi matrix is positive semidefinite".into(),
            });
        }
        Err(Error::NotHermitian { residual }) => {
            let (row, col, _) = worst_asymmetry(&c);
            rep.checks.push(Check {
                name: "completely positive".into(),
                pass: false,
                residual: Some(residual),
                tolerance: Some(tol.bound(cp_scale)),
                witness: Some(Witness::Cell { row, col }),
                detail: "Choi matrix is not Hermitian".into(),
            });
        }
        Err(e) => return Err(e),
    }

    let d = cpmaps::verify_cp_design(f, tol)?;
    rep.set("k", opt(d.k));
    rep.set("r", opt(d.r));
    rep.set("lambda_fit", opt(d.lambda_fit));
    rep.set("lambda_residual", d.lambda_residual.into());
    rep.checks.push(Check::within(
        "k-uniform",
        d.k_residual,
        tol.bound(d.k_fit),
        Some(Witness::Index { index: d.k_worst_index }),
        format!("1_out† m = k·1_in†, k ≈ {}", d.k_fit),
    ));
    rep.checks.push(Check::within(
        "r-regular",
        d.r_residual,
        tol.bound(d.r_fit),
        Some(Witness::Index { index: d.r_worst_index }),
        format!("m 1_in = r·1_out, r ≈ {}", d.r_fit),
    ));
    rep.properties.push(Check::within(
        "λ-balanced",
        d.lambda_residual,
        tol.abs_eps,
        Some(Witness::Cell {
            row: d.lambda_worst_cell.0,
            col: d.lambda_worst_cell.1,
        }),
        "m m† = λ(E − I) + r·I, residual minimised over λ",
    ));

    if let Some(alt) = f.choi_reading() {
        let a = cpmaps::verify_cp_design(&alt, tol)?;
        rep.set("choi_reading_k", opt(a.k));
        rep.set("choi_reading_r", opt(a.r));
        rep.set("choi_reading_lambda_residual", a.lambda_residual.into());
        rep.properties.push(Check::within(
            "λ-balanced (matrix read as Choi)",
            a.lambda_residual,
            tol.abs_eps,
            Some(Witness::Cell {
                row: a.lambda_worst_cell.0,
                col: a.lambda_worst_cell.1,
            }),
            format!("k ≈ {}, r ≈ {}", a.k_fit, a.r_fit),
        ));
    }

    let tp = cpmaps::is_trace_preserving(f, tol)?;
    rep.properties.push(Check::within(
        "trace preserving",
        tp.residual,
        tol.bound(1.0),
        Some(Witness::Values {
            lhs: "Tr_out C".into(),
            rhs: "I".into(),
        }),
        "",
    ));
    rep.notes.push(ORIENTATION_NOTE.into());
    if !d.lambda_balanced {
        rep.notes.push(format!(
            "λ-balance does not hold under the superoperator reading: the best λ leaves a residual of {}.",
            d.lambda_residual
        ));
    }
    Ok(rep)
}

/// Runs [`search_designs`] and reports every design found. Infeasible
/// parameters produce a failed identity check and no search.
pub fn search_report(params: SearchParams, limit: Option<usize>, canonical: bool) -> Result<DesignReport> {
    let SearchParams { v, b, k, r, lambda } = params;
    let request = json!({"v": v, "b": b, "k": k, "r": r, "lambda": lambda, "limit": limit, "canonical": canonical});
    let mut rep = DesignReport::new("search", &[catalog_io::to_canonical(&request)]);
    for (key, value) in request.as_object().expect("object") {
        rep.set(key, value.clone());
    }
    let dp = crate::classical::DesignParams {
        k: Some(k as u64),
        r: Some(r as u64),
        lambda: Some(lambda as u64),
        symmetric: v == b,
    };
    let mut feasible = true;
    for c in check_identities(v as u64, b as u64, &dp)? {
        feasible &= c.pass;
        rep.checks.push(Check::exact(
            c.name,
            c.pass,
            Some(Witness::Values {
                lhs: c.lhs.to_string(),
                rhs: c.rhs.to_string(),
            }),
            format!("{} = {}", c.lhs, c.rhs),
        ));
    }
    if !feasible {
        rep.notes
            .push("Parameters fail the counting identities; no search was run.".into());
        return Ok(rep);
    }
    let found = search_designs(params, limit, canonical)?;
    let mismatched = found
        .iter()
        .position(|d| d.classify().ok().map(|p| (p.k, p.r, p.lambda)) != Some((dp.k, dp.r, dp.lambda)));
    rep.checks.push(Check::exact(
        "found designs classify as requested",
        mismatched.is_none(),
        mismatched.map(|index| Witness::Index { index }),
        "",
    ));
    rep.set("count", found.len().into());
    rep.properties.push(Check::exact(
        "design exists",
        !found.is_empty(),
        Some(Witness::Index { index: 0 }),
        format!("{} found", found.len()),
    ));
    rep.designs = Some(found.iter().map(|d| json!(d.incidence().to_rows())).collect());
    Ok(rep)
}

/// Checks `F_v χ = χ′ F_b` and, for 0/1 block designs on both sides, the
/// lifted squares of the diagonal projector designs.
pub fn hom_report(src: &ClassicalDesign, dst: &ClassicalDesign, h: &HomPair, tol: Tolerance) -> Result<DesignReport> {
    let maps = json!({"f_v": h.f_v(), "f_b": h.f_b()});
    let mut rep = DesignReport::new(
        "hom-check",
        &[
            catalog_io::classical_to_json(src),
            catalog_io::classical_to_json(dst),
            catalog_io::to_canonical(&maps),
        ],
    );
    rep.set("f_v", h.f_v().into());
    rep.set("f_b", h.f_b().into());
    let check = verify_hom(src, dst, h)?;
    rep.checks.push(Check::exact(
        "F_v·χ = χ′·F_b",
        check.holds,
        check.counterexample.map(|c| Witness::Cell {
            row: c.point,
            col: c.block,
        }),
        check
            .counterexample
            .map(|c| format!("{} != {}", c.lhs, c.rhs))
            .unwrap_or_default(),
    ));
    if !check.holds {
        return Ok(rep);
    }
    match cpmaps::functor_q_on_hom(src, dst, h) {
        Ok(lift) => {
            let t = tol.bound(1.0);
            rep.checks
                .push(Check::within("lifted base square", lift.base, t, None, ""));
            rep.checks.push(Check::within(
                "lifted comultiplication square",
                lift.comultiplication,
                t,
                None,
                "",
            ));
            rep.checks
                .push(Check::within("lifted outer square", lift.outer, t, None, ""));
            rep.properties.push(Check::within(
                "block map preserves multiplication",
                lift.multiplication,
                t,
                None,
                "holds exactly when f_b is injective",
            ));
        }
        Err(Error::NotZeroOne { .. }) | Err(Error::NotBlockDesign(_)) => {
            rep.notes
                .push("Lifted squares skipped: both designs must be 0/1 block designs.".into());
        }
        Err(e) => return Err(e),
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classical::{gen_complete, gen_projective_plane};
    use crate::cpmaps::{example_cp_map, functor_q};
    use crate::quantum::mub_generate;

    #[test]
    fn fano_block_report() {
        let rep = classical_report(&gen_projective_plane(2).unwrap(), true).unwrap();
        assert!(rep.passed());
        assert_eq!(rep.parameters["k"], json!(3));
        assert_eq!(rep.parameters["lambda"], json!(1));
        assert!(rep.check("b·k = r·v").unwrap().pass);
        assert!(rep.check("λ(v−1) = r(k−1)").unwrap().pass);
    }

    #[test]
    fn failed_checks_carry_witnesses() {
        let lopsided = ClassicalDesign::from_rows(&[[1, 1, 0], [0, 1, 1], [0, 0, 1]]).unwrap();
        let rep = classical_report(&lopsided, true).unwrap();
        assert!(!rep.passed());
        for c in rep.checks.iter().filter(|c| !c.pass) {
            assert!(c.witness.is_some(), "{c:?}");
        }
        assert_eq!(
            rep.check("r-regular").unwrap().witness,
            Some(Witness::Index { index: 2 })
        );

        let rep = cpmap_report(&CpMap::transpose_map(2), Tolerance::default()).unwrap();
        let cp = rep.check("completely positive").unwrap();
        assert!(!cp.pass);
        match cp.witness {
            Some(Witness::Eigenvalue { value }) => assert!((value + 1.0).abs() < 1e-9),
            ref w => panic!("{w:?}"),
        }
    }

    #[test]
    fn non_block_mode_keeps_structure_informational() {
        let d = ClassicalDesign::from_rows(&[[1, 1], [0, 1]]).unwrap();
        let rep = classical_report(&d, false).unwrap();
        assert!(rep.passed());
        assert!(!rep.property("r-regular").unwrap().pass);
    }

    #[test]
    fn quantum_report_for_fano_image() {
        let qd = functor_q(&gen_projective_plane(2).unwrap()).unwrap();
        let rep = quantum_report(&qd, Tolerance::default()).unwrap();
        assert!(rep.passed(), "{}", rep.to_text());
        assert_eq!(rep.parameters["degree"], json!(1));
        assert_eq!(rep.parameters["lambda_set"], json!([1.0]));
        assert_eq!(rep.parameters["commutative"], json!(true));
    }

    #[test]
    fn mub_report_has_degree_two() {
        let qd = crate::quantum::mub_verify(&mub_generate(3, 4).unwrap(), Tolerance::default())
            .unwrap()
            .design;
        let rep = quantum_report(&qd, Tolerance::default()).unwrap();
        assert!(rep.passed());
        assert_eq!(rep.parameters["degree"], json!(2));
        assert!(!rep.property("λ-balanced").unwrap().pass);
        assert!(rep.check("λ(v−1) = r(k−1)").is_none());
    }

    #[test]
    fn example_map_report() {
        let rep = cpmap_report(&example_cp_map(), Tolerance::default()).unwrap();
        assert!(rep.passed());
        assert_eq!(rep.parameters["k"], json!(2.0));
        assert_eq!(rep.parameters["r"], json!(2.0));
        assert!(!rep.property("λ-balanced").unwrap().pass);
        assert!(!rep.property("λ-balanced (matrix read as Choi)").unwrap().pass);
        assert!(!rep.property("trace preserving").unwrap().pass);
    }

    #[test]
    fn search_reports() {
        let rep = search_report(SearchParams::new(4, 4, 2, 2, 1), None, true).unwrap();
        assert!(!rep.passed());
        assert!(rep.designs.is_none());
        let rep = search_report(SearchParams::new(3, 3, 2, 2, 1), None, true).unwrap();
        assert!(rep.passed());
        assert_eq!(rep.parameters["count"], json!(1));
    }

    #[test]
    fn hom_reports() {
        let fano = gen_projective_plane(2).unwrap();
        let rep = hom_report(&fano, &fano, &HomPair::identity(&fano), Tolerance::default()).unwrap();
        assert!(rep.passed());
        let point = ClassicalDesign::from_rows(&[[3]]).unwrap();
        let collapse = HomPair::new(vec![0; 7], vec![0; 7], 1, 1).unwrap();
        let rep = hom_report(&fano, &point, &collapse, Tolerance::default()).unwrap();
        assert!(rep.passed());
        assert!(!rep.notes.is_empty());
    }

    #[test]
    fn json_round_trip_and_determinism() {
        let d = gen_complete(4, 2).unwrap();
        let a = classical_report(&d, true).unwrap();
        let b = classical_report(&d, true).unwrap();
        assert_eq!(a.to_json(), b.to_json());
        assert_eq!(DesignReport::from_json(&a.to_json()).unwrap(), a);
        assert!(a.input_digest.starts_with("sha256:"));
        assert_eq!(a.input_digest.len(), 7 + 64);
    }

    #[test]
    fn digest_separates_inputs() {
        assert_ne!(input_digest(&["ab", "c"]), input_digest(&["a", "bc"]));
    }
}
