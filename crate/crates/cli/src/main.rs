use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand};
use rayon::prelude::*;

use halfmono::coloring::{baseline_coloring, coloring_from_regions};
use halfmono::independence::{alpha_bruteforce, alpha_via_konig, maximum_matching};
use halfmono::io::generate::{generate_instance, random_corpus, Family};
use halfmono::io::report::ChiFReport;
use halfmono::io::svg::{render_svg, RenderSpec};
use halfmono::oracle::{chi_f_bruteforce, DEFAULT_VERTEX_CAP};
use halfmono::search::{
    exact_chi_f, sweep_dividing_systems, ProofCase, SearchOptions, DEFAULT_FACE_CAP,
    SWEEP_FACE_CAP,
};
use halfmono::{DividingSystem, Error, InstanceFile, MedialGraph, Parities, PlaneGraph, RegionDecomposition};

#[derive(Parser)]
#[command(name = "halfmono", version, about = "Half-monochromatic colorings of plane graphs with even faces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that every face is an even simple cycle.
    Validate { file: PathBuf },
    /// Compute the maximum number of colors exactly.
    Chif {
        file: PathBuf,
        /// Print the optimal coloring.
        #[arg(long)]
        witness: bool,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = DEFAULT_FACE_CAP)]
        face_cap: usize,
        /// Split the search across threads.
        #[arg(long)]
        parallel: bool,
    },
    /// Independence number via maximum matching.
    Alpha {
        file: PathBuf,
        /// Cross-check with subset search.
        #[arg(long)]
        brute: bool,
    },
    /// Bound, claim audit, and region/tree laws for a file or directory.
    Check {
        path: PathBuf,
        #[arg(long, default_value_t = DEFAULT_FACE_CAP)]
        face_cap: usize,
    },
    /// Brute-force the maximum number of colors over vertex partitions.
    Oracle {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_VERTEX_CAP)]
        vertex_cap: usize,
    },
    /// Draw the graph as SVG.
    Render {
        file: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        /// Dividing system to draw, one bit per face.
        #[arg(long)]
        parities: Option<String>,
        /// Color vertices by region (of the given system, or an optimal one).
        #[arg(long)]
        color: bool,
    },
    /// Write a generated instance.
    Gen {
        #[command(subcommand)]
        family: GenFamily,
        #[arg(short, long, global = true)]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum GenFamily {
    /// Even cycle of the given length.
    Cycle { length: usize },
    Grid { rows: usize, cols: usize },
    /// Prism over an even cycle; `prism 4` is the cube.
    Prism { length: usize },
    /// Random instance grown from a small family member.
    Random {
        seed: u64,
        #[arg(long, default_value_t = 10)]
        max_vertices: usize,
    },
}

fn load(path: &Path) -> anyhow::Result<(String, PlaneGraph)> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let inst = InstanceFile::parse(&text)?;
    let g = inst.to_graph()?;
    g.validate_even_polygonal().into_result()?;
    g.compute_bipartition()?;
    Ok((inst.name, g))
}

fn exit_code(err: &anyhow::Error) -> u8 {
    err.downcast_ref::<Error>().map_or(1, |e| e.exit_code() as u8)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn run(cmd: Command) -> anyhow::Result<u8> {
    match cmd {
        Command::Validate { file } => {
            let text = fs::read_to_string(&file)?;
            let inst = InstanceFile::parse(&text)?;
            let g = inst.to_graph()?;
            let report = g.validate_even_polygonal();
            let degrees: Vec<String> = g.faces().iter().map(|f| f.degree().to_string()).collect();
            println!(
                "{}: {} vertices, {} edges, {} faces (degrees {})",
                inst.name,
                g.vertex_count(),
                g.edge_count(),
                g.face_count(),
                degrees.join(" ")
            );
            println!("{report}");
            if !report.is_valid() {
                return Ok(1);
            }
            g.compute_bipartition()?;
            Ok(0)
        }
        Command::Chif {
            file,
            witness,
            json,
            face_cap,
            parallel,
        } => {
            let (name, g) = load(&file)?;
            let r = exact_chi_f(&g, SearchOptions { face_cap, parallel })?;
            if json {
                println!("{}", ChiFReport::new(&name, &g, &r, witness).to_json());
            } else {
                println!("{name}: chiF = {}, alpha = {}", r.chi_f, r.alpha);
                println!(
                    "bound 2*chiF <= 3*alpha: {} ({} <= {})",
                    if r.bound_satisfied { "holds" } else { "VIOLATED" },
                    2 * r.chi_f,
                    3 * r.alpha
                );
                println!("witness parities {} ({} systems explored)", r.witness_parities, r.systems_explored);
                if witness {
                    for (x, members) in r.regions.members.iter().enumerate() {
                        println!("  color {x}: {members:?}");
                    }
                }
            }
            if !r.bound_satisfied {
                return Err(Error::BoundViolated {
                    chi_f: r.chi_f,
                    alpha: r.alpha,
                }
                .into());
            }
            r.audit.ensure()?;
            Ok(0)
        }
        Command::Alpha { file, brute } => {
            let (name, g) = load(&file)?;
            let b = g.compute_bipartition()?;
            let m = maximum_matching(&g, &b);
            let alpha = alpha_via_konig(&g, &b);
            println!("{name}: alpha = {alpha} (matching {}, |V| = {})", m.size(), g.vertex_count());
            println!("independent set {:?}", m.independent_set(g.vertex_count()));
            if brute {
                let a = alpha_bruteforce(&g)?;
                println!("subset search: {a}");
                if a != alpha {
                    return Ok(2);
                }
            }
            Ok(0)
        }
        Command::Check { path, face_cap } => check(&path, face_cap),
        Command::Oracle { file, vertex_cap } => {
            let (name, g) = load(&file)?;
            let r = chi_f_bruteforce(&g, vertex_cap)?;
            println!(
                "{name}: chiF = {} ({} proper partitions scanned)",
                r.chi_f, r.partitions_scanned
            );
            println!("witness {:?}", r.witness.colors());
            Ok(0)
        }
        Command::Render {
            file,
            output,
            parities,
            color,
        } => {
            let (_, g) = load(&file)?;
            let mut spec = RenderSpec::new(&g);
            let parities = match parities {
                Some(bits) => Some(bits.parse::<Parities>()?),
                None if color => Some(exact_chi_f(&g, SearchOptions::default())?.witness_parities),
                None => None,
            };
            if color {
                let p = parities.clone().expect("set above");
                let m = MedialGraph::new(&g);
                let d = DividingSystem::assemble(&m, p)?;
                spec.coloring = Some(coloring_from_regions(&RegionDecomposition::compute(&m, &d)?));
            }
            spec.parities = parities;
            fs::write(&output, render_svg(&spec)?)?;
            Ok(0)
        }
        Command::Gen { family, output } => {
            let inst = match family {
                GenFamily::Cycle { length } => generate_instance(Family::Cycle(length))?,
                GenFamily::Grid { rows, cols } => generate_instance(Family::Grid(rows, cols))?,
                GenFamily::Prism { length } => generate_instance(Family::Prism(length))?,
                GenFamily::Random { seed, max_vertices } => {
                    if max_vertices < 4 {
                        return Err(Error::BadParameter("max-vertices must be at least 4".into()).into());
                    }
                    random_corpus(seed, 1, max_vertices).remove(0)
                }
            };
            match output {
                Some(path) => fs::write(path, inst.to_text())?,
                None => print!("{}", inst.to_text()),
            }
            Ok(0)
        }
    }
}

/// One line per instance and the exit code it earns.
fn check_one(path: &Path, face_cap: usize) -> (String, u8) {
    let (name, g) = match load(path) {
        Ok(x) => x,
        Err(e) => return (format!("{}: {e:#}", path.display()), exit_code(&e)),
    };
    let r = match exact_chi_f(&g, SearchOptions { face_cap, parallel: false }) {
        Ok(r) => r,
        Err(e) => return (format!("{name}: {e}"), e.exit_code() as u8),
    };
    let mut code = 0;
    let baseline = baseline_coloring(&g.compute_bipartition().expect("validated"));
    let mut line = format!(
        "{name}: chiF={} alpha={} bound={} ({} <= {}) baseline={}",
        r.chi_f,
        r.alpha,
        if r.bound_satisfied { "ok" } else { "VIOLATED" },
        2 * r.chi_f,
        3 * r.alpha,
        baseline.k()
    );
    if !r.bound_satisfied || baseline.k() > r.chi_f {
        code = 2;
    }
    let violations = r.audit.violations();
    if violations.is_empty() {
        line += &format!(
            " claims=ok case={}",
            match r.audit.case {
                ProofCase::ManyLeaves => "i",
                ProofCase::FewLeaves => "ii",
            }
        );
    } else {
        line += &format!(" claims=VIOLATED [{}]", violations.join("; "));
        code = 2;
    }
    if g.face_count() <= SWEEP_FACE_CAP {
        match sweep_dividing_systems(&g, SWEEP_FACE_CAP) {
            Ok(s) if s.failures() == 0 => line += &format!(" laws=ok ({} systems)", s.systems),
            Ok(s) => {
                line += &format!(" laws=VIOLATED {s:?}");
                code = 2;
            }
            Err(e) => {
                line += &format!(" laws=error ({e})");
                code = code.max(e.exit_code() as u8);
            }
        }
    } else {
        line += " laws=skipped";
    }
    (line, code)
}

fn check(path: &Path, face_cap: usize) -> anyhow::Result<u8> {
    let files: Vec<PathBuf> = if path.is_dir() {
        let mut v: Vec<PathBuf> = fs::read_dir(path)?
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.is_file())
            .collect();
        v.sort();
        v
    } else {
        vec![path.to_path_buf()]
    };
    let results: Vec<(String, u8)> = files.par_iter().map(|f| check_one(f, face_cap)).collect();
    let mut code = 0;
    for (line, c) in results {
        println!("{line}");
        code = code.max(c);
    }
    Ok(code)
}
