//! Command-line front end. The `qdesign` binary is a thin wrapper around
//! [`run`].
//!
//! Exit codes: 0 when every check passes, 1 when checks ran and at least one
//! failed (or an operation refused its input), 2 for usage and format errors.
//!
//! `FILE` arguments accept `-` for stdin and `catalog:NAME` for a bundled
//! catalog entry.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::Path;

use clap::{Args, Parser, Subcommand};

use crate::catalog_io::{self, Document};
use crate::classical::{HomPair, SearchParams};
use crate::cpmaps::functor_q;
use crate::numkit::Tolerance;
use crate::quantum::{mub_generate, mub_verify};
use crate::report::{self, DesignReport};
use crate::{classical, Error};

#[derive(Debug, Parser)]
#[command(
    name = "qdesign",
    version,
    about = "Verify, generate and convert classical and quantum designs"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Global {
    /// Absolute tolerance.
    #[arg(long, global = true, default_value_t = 1e-9)]
    abs_eps: f64,
    /// Relative tolerance.
    #[arg(long, global = true, default_value_t = 1e-9)]
    rel_eps: f64,
    /// Emit reports as design-report/1 JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Output file (default stdout).
    #[arg(short, long, global = true)]
    output: Option<String>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Classify an incidence matrix and check the counting identities.
    VerifyClassical {
        file: String,
        /// Require k, r and λ to exist.
        #[arg(long)]
        block: bool,
    },
    /// Validate a projector family, classify it, check the counting identities.
    VerifyQuantum { file: String },
    /// Complete positivity, design conditions and trace preservation of a map.
    VerifyCpmap { file: String },
    /// Write a generated design.
    Generate {
        #[command(subcommand)]
        what: Generate,
    },
    /// Convert between block designs and commutative quantum designs.
    Convert {
        #[command(subcommand)]
        direction: Convert,
    },
    /// Tensor product of two classical or two quantum designs.
    Tensor { first: String, second: String },
    /// Dual (transposed) classical design.
    Dual { file: String },
    /// Backtracking search for 0/1 designs.
    Search {
        #[arg(long)]
        v: usize,
        #[arg(long)]
        b: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        lambda: usize,
        /// Stop after this many designs.
        #[arg(long)]
        limit: Option<usize>,
        /// Only designs with blocks in canonical order.
        #[arg(long)]
        canonical: bool,
    },
    /// Check a candidate homomorphism between two classical designs.
    HomCheck {
        src: String,
        dst: String,
        /// Point map, 1-based, e.g. "1 3 2".
        #[arg(long)]
        fv: String,
        /// Block map, 1-based.
        #[arg(long)]
        fb: String,
    },
    /// List the bundled catalog or print one entry.
    Catalog { name: Option<String> },
}

#[derive(Debug, Subcommand)]
enum Generate {
    ProjectivePlane {
        #[arg(long)]
        order: usize,
    },
    Complete {
        #[arg(long)]
        v: usize,
        #[arg(long)]
        k: usize,
    },
    Mub {
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        count: usize,
    },
}

#[derive(Debug, Subcommand)]
enum Convert {
    /// Block design to diagonal projector design.
    C2q { file: String },
    /// Commutative quantum design to block design.
    Q2c { file: String },
}

/// Failure of a command, with its exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Format { .. }
            | Error::SchemaMismatch { .. }
            | Error::InvalidArgument(_)
            | Error::DimensionMismatch(_)
            | Error::UnknownCatalogEntry(_)
            | Error::OutOfRange { .. } => 2,
            _ => 1,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    stdout: &'a mut dyn Write,
}

impl Io<'_> {
    fn read(&mut self, source: &str) -> Result<Document, Failure> {
        if let Some(name) = source.strip_prefix("catalog:") {
            return Ok(catalog_io::catalog_get(name)?);
        }
        if source == "-" {
            let mut text = String::new();
            self.stdin
                .read_to_string(&mut text)
                .map_err(|e| usage(format!("stdin: {e}")))?;
            return Ok(catalog_io::parse_document(&text)?);
        }
        Ok(catalog_io::load(Path::new(source))?)
    }

    fn write(&mut self, output: Option<&str>, text: &str) -> Result<(), Failure> {
        match output {
            None | Some("-") => self
                .stdout
                .write_all(text.as_bytes())
                .map_err(|e| usage(format!("stdout: {e}"))),
            Some(path) => std::fs::write(path, text).map_err(|e| usage(format!("{path}: {e}"))),
        }
    }
}

fn classical_input(doc: Document, source: &str) -> Result<classical::ClassicalDesign, Failure> {
    match doc {
        Document::Classical(d) => Ok(d),
        other => Err(usage(format!(
            "{source}: expected {}, found {}",
            catalog_io::CLASSICAL_SCHEMA,
            other.schema()
        ))),
    }
}

fn parse_map(text: &str, flag: &str) -> Result<Vec<usize>, Failure> {
    text.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|s| !s.is_empty())
        .map(|s| match s.parse::<usize>() {
            Ok(x) if x >= 1 => Ok(x - 1),
            _ => Err(usage(format!("--{flag}: expected 1-based indices, found {s:?}"))),
        })
        .collect()
}

/// Runs one invocation and returns its exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if code == 0 { stdout } else { stderr };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    let mut io = Io { stdin, stdout };
    match execute(cli, &mut io) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    }
}

fn execute(cli: Cli, io: &mut Io<'_>) -> Result<i32, Failure> {
    let g = cli.global;
    let tol = Tolerance::new(g.abs_eps, g.rel_eps).map_err(|e| usage(e.to_string()))?;
    let out = g.output.as_deref();

    let emit_report = |io: &mut Io<'_>, rep: DesignReport| -> Result<i32, Failure> {
        let text = if g.json { rep.to_json() } else { rep.to_text() };
        io.write(out, &text)?;
        Ok(if rep.passed() { 0 } else { 1 })
    };
    let emit_doc = |io: &mut Io<'_>, doc: Document| -> Result<i32, Failure> {
        io.write(out, &doc.to_json())?;
        Ok(0)
    };

    match cli.command {
        Command::VerifyClassical { file, block } => {
            let d = classical_input(io.read(&file)?, &file)?;
            emit_report(io, report::classical_report(&d, block)?)
        }
        Command::VerifyQuantum { file } => match io.read(&file)? {
            Document::Quantum(q) => emit_report(io, report::quantum_report(&q, tol)?),
            other => Err(usage(format!(
                "{file}: expected quantum-design/1, found {}",
                other.schema()
            ))),
        },
        Command::VerifyCpmap { file } => match io.read(&file)? {
            Document::CpMap(f) => emit_report(io, report::cpmap_report(&f, tol)?),
            other => Err(usage(format!("{file}: expected cp-map/1, found {}", other.schema()))),
        },
        Command::Generate { what } => {
            let doc = match what {
                Generate::ProjectivePlane { order } => {
                    Document::Classical(classical::gen_projective_plane(order as u64)?)
                }
                Generate::Complete { v, k } => Document::Classical(classical::gen_complete(v, k)?),
                Generate::Mub { dim, count } => Document::Quantum(mub_verify(&mub_generate(dim, count)?, tol)?.design),
            };
            emit_doc(io, doc)
        }
        Command::Convert { direction } => {
            let doc = match direction {
                Convert::C2q { file } => {
                    let d = classical_input(io.read(&file)?, &file)?;
                    Document::Quantum(functor_q(&d)?)
                }
                Convert::Q2c { file } => match io.read(&file)? {
                    Document::Quantum(q) => {
                        let validation = q.validate(tol)?;
                        if let Some(i) = validation.first_failure() {
                            return Err(Failure {
                                code: 1,
                                message: format!("projector {i} is not an orthogonal projector"),
                            });
                        }
                        Document::Classical(q.to_classical(tol)?)
                    }
                    other => {
                        return Err(usage(format!(
                            "{file}: expected quantum-design/1, found {}",
                            other.schema()
                        )))
                    }
                },
            };
            emit_doc(io, doc)
        }
        Command::Tensor { first, second } => {
            let doc = match (io.read(&first)?, io.read(&second)?) {
                (Document::Classical(a), Document::Classical(b)) => Document::Classical(a.tensor(&b)?),
                (Document::Quantum(a), Document::Quantum(b)) => Document::Quantum(a.tensor(&b)),
                (a, b) => {
                    return Err(usage(format!(
                        "tensor needs two classical or two quantum designs, found {} and {}",
                        a.schema(),
                        b.schema()
                    )))
                }
            };
            emit_doc(io, doc)
        }
        Command::Dual { file } => {
            let d = classical_input(io.read(&file)?, &file)?;
            emit_doc(io, Document::Classical(d.dual()))
        }
        Command::Search {
            v,
            b,
            k,
            r,
            lambda,
            limit,
            canonical,
        } => emit_report(
            io,
            report::search_report(SearchParams::new(v, b, k, r, lambda), limit, canonical)?,
        ),
        Command::HomCheck { src, dst, fv, fb } => {
            let a = classical_input(io.read(&src)?, &src)?;
            let b = classical_input(io.read(&dst)?, &dst)?;
            let h = HomPair::new(parse_map(&fv, "fv")?, parse_map(&fb, "fb")?, b.v(), b.b())?;
            emit_report(io, report::hom_report(&a, &b, &h, tol)?)
        }
        Command::Catalog { name: None } => {
            let mut text = String::new();
            for e in catalog_io::catalog_index() {
                text.push_str(&format!("{:<16} {:<20} {}\n", e.name, e.schema, e.description));
            }
            io.write(out, &text)?;
            Ok(0)
        }
        Command::Catalog { name: Some(name) } => {
            let text = catalog_io::catalog_text(&name)?;
            io.write(out, text)?;
            Ok(0)
        }
    }
}
