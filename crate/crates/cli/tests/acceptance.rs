//! Acceptance criteria, one PASS/FAIL line each.
//!
//! Runs without the test harness so the report is always printed:
//! `cargo test -p halfmono-cli --test acceptance`. The process exits
//! non-zero if any criterion fails.

use std::fs;
use std::process::Command;
use std::time::Instant;

use halfmono::coloring::{baseline_coloring, check_half_monochromatic, check_proper, face_color_count};
use halfmono::independence::{alpha_bruteforce, alpha_via_konig, BRUTEFORCE_VERTEX_CAP};
use halfmono::io::generate::{generate_instance, random_corpus, subdivided_grids, Family};
use halfmono::oracle::chi_f_bruteforce;
use halfmono::search::{bound_holds, exact_chi_f, sweep_dividing_systems, SWEEP_FACE_CAP};
use halfmono::{Error, InstanceFile, PlaneGraph, SearchOptions, SearchResult};

struct Instance {
    name: String,
    graph: PlaneGraph,
}

fn named(inst: InstanceFile) -> Instance {
    Instance {
        graph: inst.to_graph().expect("corpus instance builds"),
        name: inst.name,
    }
}

fn family(f: Family) -> Instance {
    named(generate_instance(f).expect("valid family"))
}

/// The instances with at most ten vertices that the oracle can settle.
fn small_corpus() -> Vec<Instance> {
    let mut out: Vec<Instance> = [
        Family::Cycle(4),
        Family::Cycle(6),
        Family::Cycle(8),
        Family::Grid(2, 3),
        Family::Grid(2, 4),
    ]
    .into_iter()
    .map(family)
    .collect();
    out.extend(subdivided_grids(2024, 25, 10).into_iter().map(named));
    out
}

fn full_corpus() -> Vec<Instance> {
    let mut out = small_corpus();
    for len in [10, 12] {
        out.push(family(Family::Cycle(len)));
    }
    for len in [4, 6, 8] {
        out.push(family(Family::Prism(len)));
    }
    for rows in 2..=4 {
        for cols in rows..=5 {
            if (rows, cols) != (2, 3) && (rows, cols) != (2, 4) {
                out.push(family(Family::Grid(rows, cols)));
            }
        }
    }
    out.extend(random_corpus(7, 40, 14).into_iter().map(named));
    out.extend(random_corpus(8, 20, 22).into_iter().map(named));
    out
}

struct Report {
    lines: Vec<String>,
    failed: usize,
}

impl Report {
    fn record(&mut self, id: usize, title: &str, failures: &[String], detail: String) {
        let verdict = if failures.is_empty() { "PASS" } else { "FAIL" };
        self.lines.push(format!("{verdict} {id}. {title}: {detail}"));
        for f in failures.iter().take(5) {
            self.lines.push(format!("       {f}"));
        }
        if !failures.is_empty() {
            self.failed += 1;
        }
    }
}

fn solve(g: &PlaneGraph) -> SearchResult {
    exact_chi_f(g, SearchOptions::default()).expect("corpus instance is searchable")
}

fn main() {
    let mut report = Report {
        lines: Vec::new(),
        failed: 0,
    };
    let small = small_corpus();
    let corpus = full_corpus();
    let solved: Vec<SearchResult> = corpus.iter().map(|i| solve(&i.graph)).collect();

    // 1. Solver against the partition oracle.
    let start = Instant::now();
    let mut bad = Vec::new();
    for inst in &small {
        let exact = solve(&inst.graph).chi_f;
        let oracle = chi_f_bruteforce(&inst.graph, 12).expect("within oracle cap").chi_f;
        if exact != oracle {
            bad.push(format!("{}: solver {exact}, oracle {oracle}", inst.name));
        }
    }
    let secs = start.elapsed().as_secs_f64();
    if secs >= 60.0 {
        bad.push(format!("took {secs:.1} s"));
    }
    report.record(
        1,
        "exact search equals oracle",
        &bad,
        format!("{} instances with at most 10 vertices in {secs:.2} s", small.len()),
    );

    // 2. Bound certificate over the whole corpus.
    let mut bad: Vec<String> = corpus
        .iter()
        .zip(&solved)
        .filter(|(_, r)| !r.bound_satisfied || !bound_holds(r.chi_f, r.alpha))
        .map(|(i, r)| format!("{}: chiF {} alpha {}", i.name, r.chi_f, r.alpha))
        .collect();
    let code = Error::BoundViolated { chi_f: 0, alpha: 0 }.exit_code();
    if code != 2 {
        bad.push(format!("bound violation maps to exit code {code}"));
    }
    let largest = corpus.iter().map(|i| i.graph.face_count()).max().unwrap();
    report.record(
        2,
        "2*chiF <= 3*alpha",
        &bad,
        format!("{} instances, up to {largest} faces", corpus.len()),
    );

    // 3. Tightness on the even cycles.
    let mut bad = Vec::new();
    for n in 2..=6 {
        let g = family(Family::Cycle(2 * n)).graph;
        let r = solve(&g);
        let oracle = chi_f_bruteforce(&g, 12).expect("within oracle cap").chi_f;
        let baseline = baseline_coloring(&g.compute_bipartition().unwrap()).k();
        if (r.chi_f, r.alpha, oracle) != (n + 1, n, n + 1) {
            bad.push(format!("C{}: chiF {} alpha {} oracle {oracle}", 2 * n, r.chi_f, r.alpha));
        }
        if baseline < n + 1 || 3 * r.alpha / 2 < n + 1 {
            bad.push(format!("C{}: sandwich {baseline} <= {} fails", 2 * n, 3 * r.alpha / 2));
        }
        if n == 2 && 2 * r.chi_f != 3 * r.alpha {
            bad.push("C4 is not tight".into());
        }
    }
    report.record(3, "even cycles give (n+1, n), C4 tight", &bad, "n = 2..6".into());

    // 4 and 5. Every dividing system of every instance with few faces.
    let mut count_bad = Vec::new();
    let mut tree_bad = Vec::new();
    let mut systems = 0u64;
    let mut swept = 0;
    for inst in corpus.iter().filter(|i| i.graph.face_count() <= SWEEP_FACE_CAP) {
        let s = sweep_dividing_systems(&inst.graph, SWEEP_FACE_CAP).expect("within sweep cap");
        systems += s.systems;
        swept += 1;
        if s.systems != 1 << inst.graph.face_count() || s.region_count_failures + s.empty_region_failures > 0 {
            count_bad.push(format!("{}: {s:?}", inst.name));
        }
        if s.tree_failures + s.edge_law_failures + s.inner_node_failures + s.coloring_failures > 0 {
            tree_bad.push(format!("{}: {s:?}", inst.name));
        }
    }
    for (f, expected) in [(Family::Grid(3, 4), 128), (Family::Prism(6), 256)] {
        let s = sweep_dividing_systems(&family(f).graph, SWEEP_FACE_CAP).unwrap();
        if s.systems != expected {
            count_bad.push(format!("{f:?}: {} systems, expected {expected}", s.systems));
        }
    }
    let detail = format!("{systems} systems over {swept} instances");
    report.record(4, "regions = cycles + 1", &count_bad, detail.clone());
    report.record(5, "division tree laws", &tree_bad, detail);

    // 6. No optimal witness leaves a face with exactly two colors.
    let bad: Vec<String> = corpus
        .iter()
        .zip(&solved)
        .filter(|(i, r)| {
            !r.audit.passed()
                || (0..i.graph.face_count()).any(|f| face_color_count(&i.graph, &r.witness_coloring, f) == 2)
        })
        .map(|(i, r)| format!("{}: {:?}", i.name, r.audit.violations()))
        .collect();
    report.record(6, "no two-colored faces in witnesses", &bad, format!("{} witnesses", solved.len()));

    // 7. Bipartition baseline.
    let bad: Vec<String> = corpus
        .iter()
        .zip(&solved)
        .filter_map(|(i, r)| {
            let g = &i.graph;
            let c = baseline_coloring(&g.compute_bipartition().unwrap());
            let ok = check_proper(g, &c)
                && check_half_monochromatic(g, &c)
                && 2 * c.k() >= g.vertex_count()
                && r.chi_f >= c.k();
            (!ok).then(|| format!("{}: baseline {} chiF {}", i.name, c.k(), r.chi_f))
        })
        .collect();
    report.record(7, "baseline coloring", &bad, format!("{} instances", corpus.len()));

    // 8. Matching-based independence number against subset search.
    let mut bad = Vec::new();
    let mut compared = 0;
    for inst in &corpus {
        let g = &inst.graph;
        let alpha = alpha_via_konig(g, &g.compute_bipartition().unwrap());
        if 2 * alpha < g.vertex_count() {
            bad.push(format!("{}: alpha {alpha} below half", inst.name));
        }
        if g.vertex_count() <= BRUTEFORCE_VERTEX_CAP {
            compared += 1;
            let brute = alpha_bruteforce(g).unwrap();
            if brute != alpha {
                bad.push(format!("{}: matching {alpha}, subsets {brute}", inst.name));
            }
        }
    }
    report.record(8, "independence number", &bad, format!("{compared} cross-checked"));

    // 9. Command-line JSON is byte-identical across runs and schedules.
    let dir = std::env::temp_dir().join(format!("halfmono-acceptance-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let mut bad = Vec::new();
    let samples = [
        generate_instance(Family::Grid(3, 4)).unwrap(),
        generate_instance(Family::Prism(6)).unwrap(),
        random_corpus(9, 1, 14).remove(0),
    ];
    for inst in &samples {
        let path = dir.join(format!("{}.txt", inst.name));
        fs::write(&path, inst.to_text()).unwrap();
        let chif = |extra: &[&str]| {
            Command::new(env!("CARGO_BIN_EXE_halfmono"))
                .args(["chif", path.to_str().unwrap(), "--json", "--witness"])
                .args(extra)
                .output()
                .unwrap()
        };
        let (a, b, c) = (chif(&[]), chif(&[]), chif(&["--parallel"]));
        if !a.status.success() || a.stdout != b.stdout || a.stdout != c.stdout {
            bad.push(format!("{}: outputs differ", inst.name));
        }
    }
    let _ = fs::remove_dir_all(&dir);
    report.record(9, "deterministic JSON", &bad, format!("{} instances, serial and parallel", samples.len()));

    println!("{}", report.lines.join("\n"));
    println!("acceptance: {} of 9 criteria failed", report.failed);
    if report.failed > 0 {
        std::process::exit(1);
    }
}
