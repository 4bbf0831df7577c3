//! Command-line front end: validate, apply, goldberg and info.
//!
//! Exit codes are 0 on success, 1 when an input is invalid or a check fails,
//! and 2 for usage and parse errors.

use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use lopsp::apply::{apply, verify_path_independence};
use lopsp::decoration::{
    catalog, enumerate_cut_paths, goldberg, CatalogError, Decoration, DecorationError,
};
use lopsp::io::{self, IoError};
use lopsp::PlaneGraph;
use rayon::prelude::*;

#[derive(Parser)]
#[command(
    name = "lopsp",
    version,
    about = "Local orientation-preserving symmetry preserving operations on plane graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a decoration file and list every violated clause.
    Validate { file: PathBuf },
    /// Apply a decoration to every graph of a planar code or dart file.
    Apply {
        /// A catalog name, goldberg:a,b, or a decoration file.
        #[arg(long)]
        deco: String,
        /// Input graphs; `-` reads stdin.
        #[arg(long = "in", default_value = "-")]
        input: PathBuf,
        /// Output graphs; `-` writes stdout.
        #[arg(long, default_value = "-")]
        out: PathBuf,
        /// Also apply along this many cut paths and fail if the results differ.
        #[arg(long, value_name = "K")]
        check_paths: Option<usize>,
        /// Print counts, face vector, connectivity and Aut+ for every output.
        #[arg(long)]
        report: bool,
    },
    /// Write the decoration of the Goldberg-Coxeter operation (a, b).
    Goldberg {
        a: u32,
        b: u32,
        #[arg(long, default_value = "-")]
        out: PathBuf,
    },
    /// Summarize a decoration or graph file.
    Info { file: PathBuf },
}

struct Failure {
    code: u8,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

fn invalid(message: impl Into<String>) -> Failure {
    Failure {
        code: 1,
        message: message.into(),
    }
}

impl From<IoError> for Failure {
    fn from(e: IoError) -> Self {
        match e {
            IoError::Decoration(d) => describe(d),
            e if e.is_invalid() => invalid(format!("structural error: {e}")),
            e => usage(e.to_string()),
        }
    }
}

fn describe(e: DecorationError) -> Failure {
    if e.violations().is_empty() {
        invalid(format!("structural error: {e}"))
    } else {
        invalid(
            e.violations()
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join("\n"),
        )
    }
}

fn read_input(path: &Path) -> Result<Vec<u8>, Failure> {
    if path == Path::new("-") {
        let mut buf = Vec::new();
        std::io::stdin()
            .read_to_end(&mut buf)
            .map_err(|e| usage(format!("stdin: {e}")))?;
        Ok(buf)
    } else {
        fs::read(path).map_err(|e| usage(format!("{}: {e}", path.display())))
    }
}

fn write_output(path: &Path, bytes: &[u8]) -> Result<(), Failure> {
    if path == Path::new("-") {
        std::io::stdout()
            .write_all(bytes)
            .map_err(|e| usage(format!("stdout: {e}")))
    } else {
        fs::write(path, bytes).map_err(|e| usage(format!("{}: {e}", path.display())))
    }
}

fn read_text(path: &Path) -> Result<String, Failure> {
    String::from_utf8(read_input(path)?)
        .map_err(|_| usage(format!("{} is not text", path.display())))
}

fn is_dart_format(bytes: &[u8]) -> bool {
    String::from_utf8_lossy(&bytes[..bytes.len().min(64)])
        .trim_start()
        .starts_with(io::GRAPH_HEADER)
}

fn read_graphs(path: &Path) -> Result<Vec<PlaneGraph>, Failure> {
    let bytes = read_input(path)?;
    let graphs = if is_dart_format(&bytes) {
        io::read_graphs(&String::from_utf8_lossy(&bytes))?
    } else {
        io::read_planar_code(&bytes)?
    };
    Ok(graphs)
}

fn resolve_decoration(source: &str) -> Result<Decoration, Failure> {
    match catalog(source) {
        Ok(d) => Ok(d),
        Err(CatalogError::Unknown(_)) if Path::new(source).exists() => {
            Ok(io::read_decoration(&read_text(Path::new(source))?)?)
        }
        Err(e) => Err(usage(e.to_string())),
    }
}

fn face_vector(g: &PlaneGraph) -> String {
    g.counts()
        .face_sizes
        .iter()
        .map(|(k, n)| format!("{k}:{n}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn report(g: &PlaneGraph) -> String {
    let c = g.counts();
    format!(
        "{} {} {}, faces {}, connectivity {}, aut+ {}",
        c.vertices,
        c.edges,
        c.faces,
        face_vector(g),
        g.connectivity().k,
        g.automorphism_count()
    )
}

fn run_apply(
    deco: &str,
    input: &Path,
    out: &Path,
    check_paths: Option<usize>,
    want_report: bool,
) -> Result<(), Failure> {
    let d = resolve_decoration(deco)?;
    let graphs = read_graphs(input)?;
    let paths = check_paths.map(|k| enumerate_cut_paths(&d, k));
    let results: Vec<Result<PlaneGraph, Failure>> = graphs
        .par_iter()
        .enumerate()
        .map(|(i, g)| {
            if let Some(paths) = &paths {
                let same = verify_path_independence(&d, g, paths)
                    .map_err(|e| invalid(format!("graph {i}: {e}")))?;
                if !same {
                    return Err(invalid(format!(
                        "graph {i}: results differ between the {} cut paths",
                        paths.len()
                    )));
                }
            }
            apply(&d, g).map_err(|e| invalid(format!("graph {i}: {e}")))
        })
        .collect();
    let outputs = results.into_iter().collect::<Result<Vec<_>, _>>()?;

    let bytes = if outputs
        .iter()
        .all(|g| io::is_simple(g) && g.vertex_count() <= 255)
    {
        io::write_planar_code(&outputs)?
    } else {
        eprintln!("warning: planar code cannot hold every output; writing the dart format instead");
        outputs
            .par_iter()
            .map(io::write_graph)
            .collect::<Vec<_>>()
            .concat()
            .into_bytes()
    };
    write_output(out, &bytes)?;
    if want_report {
        let lines: Vec<String> = outputs.par_iter().map(report).collect();
        for line in lines {
            if out == Path::new("-") {
                eprintln!("{line}");
            } else {
                println!("{line}");
            }
        }
    }
    Ok(())
}

fn run_info(file: &Path) -> Result<(), Failure> {
    let bytes = read_input(file)?;
    if String::from_utf8_lossy(&bytes[..bytes.len().min(64)])
        .trim_start()
        .starts_with(io::DECO_HEADER)
    {
        let d = io::read_decoration(&String::from_utf8_lossy(&bytes))?;
        let g = d.graph();
        println!("{} {} {}", g.vertex_count(), g.edge_count(), g.face_count());
        let chirality = if d.is_chiral() {
            "chiral"
        } else {
            "reflexible"
        };
        println!(
            "inflation {}, connectivity {}, {chirality}",
            d.inflation_factor(),
            d.connectivity()
        );
    } else {
        for g in read_graphs(file)? {
            let c = g.counts();
            println!(
                "{} {} {}, connectivity {}",
                c.vertices,
                c.edges,
                c.faces,
                g.connectivity().k
            );
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Validate { file } => {
            io::read_decoration(&read_text(&file)?)?;
            println!("valid");
            Ok(())
        }
        Command::Apply {
            deco,
            input,
            out,
            check_paths,
            report,
        } => run_apply(&deco, &input, &out, check_paths, report),
        Command::Goldberg { a, b, out } => {
            let d = goldberg(a, b).map_err(|e| usage(e.to_string()))?;
            write_output(&out, io::write_decoration(&d).as_bytes())
        }
        Command::Info { file } => run_info(&file),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            if f.code == 1 {
                println!("{}", f.message);
            } else {
                eprintln!("error: {}", f.message);
            }
            ExitCode::from(f.code)
        }
    }
}
