use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use primtail::classify::{
    af_quotient, c_ntilde_structure, clopen_report, kirchberg_decomposition, pi_ideal_af_quotient,
};
use primtail::dot::export_dot;
use primtail::exmclass::{gen_fixture, ExmClassSpec};
use primtail::json::{self, PrimSubsetJson};
use primtail::lattice::{enumerate_ideals, maximal_ideals};
use primtail::prim::PrimSpace;
use primtail::t1::t1_check;
use primtail::tails::maximal_tails;
use primtail::{parse_graph, render_graph, Error, DEFAULT_MAX_VERTICES};

const EXIT_PARSE: u8 = 1;
const EXIT_PRECONDITION: u8 = 2;
const EXIT_FALSE: u8 = 3;
const EXIT_TOO_LARGE: u8 = 4;
const EXIT_OTHER: u8 = 5;

/// Primitive ideal spaces of graph C*-algebras with T1 analyses.
#[derive(Parser, Debug)]
#[command(name = "primtail", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Graph file (or ExmClass spec for gen-fixture); `-` or absent reads stdin.
    #[arg(long, global = true, value_name = "PATH")]
    input: Option<PathBuf>,

    /// Largest vertex count accepted by the exhaustive analyses.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_VERTICES, value_name = "K")]
    max_vertices: usize,

    /// Exit with status 3 when the command's main verdict is false.
    #[arg(long, global = true)]
    fail_on_false: bool,

    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Maximal tails with their kinds, and the breaking vertices.
    Tails,
    /// Every gauge-invariant ideal, marking the maximal ones.
    Ideals,
    /// All points of the primitive ideal space.
    Prim,
    /// Closure of a subset of the primitive ideal space.
    Closure {
        /// Subset as JSON, e.g. '{"gamma":[["v","a"]]}'.
        #[arg(long)]
        set: String,
    },
    /// T1 verdict with witnesses.
    T1,
    /// Whether each tail's point set is clopen.
    Clopen,
    /// Direct-sum decomposition of a purely infinite T1 graph.
    Decompose,
    /// AF quotient of a row-finite T1 graph.
    AfQuotient,
    /// AF quotient by the ideal generated by loop bases.
    PiAf,
    /// Fibres over the one-point compactification of the naturals.
    Cn,
    /// Build a truncated example-class graph from a JSON spec.
    GenFixture,
    /// Graphviz rendering of the graph.
    ExportDot {
        /// Colour vertices by how many maximal tails contain them.
        #[arg(long)]
        tails: bool,
    },
    /// Combined JSON report.
    Report,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Failure {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match &e {
            e if e.is_parse_error() => EXIT_PARSE,
            Error::TooLarge { .. } => EXIT_TOO_LARGE,
            Error::Postcondition(_) => EXIT_OTHER,
            _ => EXIT_PRECONDITION,
        };
        Failure::new(code, e.to_string())
    }
}

struct Output {
    text: String,
    verdict: Option<bool>,
}

fn json_output<T: Serialize>(value: &T, verdict: Option<bool>) -> Output {
    let mut text = serde_json::to_string_pretty(value).expect("report serializes");
    text.push('\n');
    Output { text, verdict }
}

fn read_input(path: Option<&PathBuf>) -> Result<String, Failure> {
    let mut text = String::new();
    match path {
        Some(p) if p.as_os_str() != "-" => {
            text = fs::read_to_string(p)
                .map_err(|e| Failure::new(EXIT_OTHER, format!("{}: {e}", p.display())))?;
        }
        _ => {
            io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| Failure::new(EXIT_OTHER, format!("stdin: {e}")))?;
        }
    }
    Ok(text)
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    let input = read_input(cli.input.as_ref())?;
    let bound = cli.max_vertices;
    let json_only = || match cli.format {
        Some(Format::Dot) => Err(Failure::new(
            EXIT_OTHER,
            "--format dot is only available for export-dot and gen-fixture",
        )),
        _ => Ok(()),
    };

    if let Command::GenFixture = cli.command {
        let spec: ExmClassSpec = serde_json::from_str(&input)
            .map_err(|e| Failure::new(EXIT_PARSE, format!("spec: {e}")))?;
        let g = gen_fixture(&spec)?;
        let text = match cli.format {
            None => render_graph(&g),
            Some(Format::Json) => return Ok(json_output(&json::graph(&g), None)),
            Some(Format::Dot) => export_dot(&g, None),
        };
        return Ok(Output {
            text,
            verdict: None,
        });
    }

    let g = parse_graph(&input)?;
    if g.vertex_count() > bound {
        return Err(Error::TooLarge {
            vertices: g.vertex_count(),
            bound,
        }
        .into());
    }
    if !matches!(cli.command, Command::ExportDot { .. }) {
        json_only()?;
    }
    let g = &g;
    Ok(match &cli.command {
        Command::Tails => json_output(&json::tails(g, &maximal_tails(g, bound)?), None),
        Command::Ideals => json_output(
            &json::ideals(g, &enumerate_ideals(g, bound)?, &maximal_ideals(g, bound)?),
            None,
        ),
        Command::Prim => json_output(&json::prim(g, bound)?, None),
        Command::Closure { set } => {
            let parsed: PrimSubsetJson = serde_json::from_str(set)
                .map_err(|e| Failure::new(EXIT_PARSE, format!("--set: {e}")))?;
            let s = json::subset_from_json(g, &parsed)?;
            let space = PrimSpace::new(g, bound)?;
            let c = space.closure(&s)?;
            let closed = c == s;
            json_output(
                &json::ClosureJson {
                    input: json::subset(g, &s),
                    closure: json::subset(g, &c),
                    closed,
                },
                Some(closed),
            )
        }
        Command::T1 => {
            let v = t1_check(g, bound)?;
            json_output(&json::t1(g, &v), Some(v.t1))
        }
        Command::Clopen => {
            let r = clopen_report(g, bound)?;
            let all = r.iter().all(|e| e.clopen);
            json_output(&json::clopen(g, &r), Some(all))
        }
        Command::Decompose => {
            let d = kirchberg_decomposition(g, bound)?;
            json_output(&json::decomposition(g, &d), Some(d.exhaustive))
        }
        Command::AfQuotient => json_output(&json::quotient(g, &af_quotient(g, bound)?), None),
        Command::PiAf => json_output(&json::quotient(g, &pi_ideal_af_quotient(g, bound)?), None),
        Command::Cn => json_output(
            &json::FibersJson {
                fibers: json::fibers(g, &c_ntilde_structure(g, bound)?),
            },
            None,
        ),
        Command::ExportDot { tails } => {
            let ts = if *tails {
                Some(maximal_tails(g, bound)?)
            } else {
                None
            };
            Output {
                text: export_dot(g, ts.as_deref()),
                verdict: None,
            }
        }
        Command::Report => {
            let r = json::report(g, bound)?;
            let t1 = r.t1.t1;
            json_output(&r, Some(t1))
        }
        Command::GenFixture => unreachable!(),
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_OTHER)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(&cli) {
        Ok(out) => {
            let mut stdout = io::stdout().lock();
            if stdout.write_all(out.text.as_bytes()).is_err() {
                return ExitCode::from(EXIT_OTHER);
            }
            if cli.fail_on_false && out.verdict == Some(false) {
                ExitCode::from(EXIT_FALSE)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
