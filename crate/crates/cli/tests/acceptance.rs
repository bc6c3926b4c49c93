//! One line per acceptance criterion; exits nonzero if any fails.
//!
//! Set `UPDATE_GOLDEN=1` to rewrite the golden figures instead of
//! comparing against them.

use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use twoxtwo::classify::{br_class, class_of_br_graph, BrClass};
use twoxtwo::distribution::{JointDistribution, MarginalPair};
use twoxtwo::embedding::{class_of_embedding, embed, Direction, EmbeddingPoint};
use twoxtwo::equilibria::{cce_constraints, cce_polytope, CcePolytope};
use twoxtwo::game::{named, Cell, Game, Player};
use twoxtwo::graphs::{br_graph, BrGraph, Preference};
use twoxtwo::nash::{nash_set, NashBox, NashSet};
use twoxtwo::oracle::{self, check_cce, check_nash, Library, Solver};
use twoxtwo::rational::{rat, Rational};
use twoxtwo::render::{parse_heatmap, parse_points, write_heatmap, write_points, Heatmap};
use twoxtwo::symmetry::Symmetry;

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

const SEED: u64 = 20240601;
const ORACLE_GAMES: usize = 1000;
const GRID: i64 = 100;
const COMBINATIONS: usize = 100;
const INVARIANCE_PAIRS: usize = 500;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_twoxtwo"))
}

fn run_cli(args: &[&str]) -> (i32, String, String) {
    let out = bin().args(args).output().expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).expect("utf-8 stdout"),
        String::from_utf8(out.stderr).expect("utf-8 stderr"),
    )
}

fn oracle_games() -> Vec<Game> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    (0..ORACLE_GAMES).map(|_| oracle::random_game(&mut rng)).collect()
}

fn census() -> Outcome {
    let start = Instant::now();
    let (code, out, err) = run_cli(&["census"]);
    let elapsed = start.elapsed();
    ensure(code == 0, format!("exit {code}: {err}"))?;
    for line in [
        "strict_ordinal_total 576",
        "strict_ordinal_up_to_strategy 144",
        "strict_ordinal_up_to_strategy_and_player 78",
        "partial_ordinal_classes 726",
        "br_graphs 81",
        "br_classes 15",
    ] {
        ensure(out.lines().any(|l| l == line), format!("missing `{line}`"))?;
    }
    ensure(elapsed < Duration::from_secs(10), format!("took {elapsed:?}"))?;
    Ok(format!("576/144/78/726/81/15 in {:.2?}", elapsed))
}

fn points(set: &NashSet) -> Vec<(Rational, Rational)> {
    set.components().iter().map(|c| (c.p.lo.clone(), c.q.lo.clone())).collect()
}

fn only_points(set: &NashSet, expected: &[(Rational, Rational)]) -> Result<(), String> {
    ensure(
        set.components().iter().all(|c| c.p.is_point() && c.q.is_point()),
        "nash set has a non-point component",
    )?;
    let mut got = points(set);
    let mut want = expected.to_vec();
    got.sort();
    want.sort();
    ensure(got == want, format!("nash points {got:?}, expected {want:?}"))
}

fn prisoners_dilemma() -> Outcome {
    let g = named::prisoners_dilemma();
    only_points(&nash_set(&g), &[(rat(0, 1), rat(0, 1))])?;
    let poly = cce_polytope(&g);
    ensure(poly.vertices == vec![JointDistribution::point_mass(Cell::BB)], "cce is not the point mass on BB")?;
    Ok("NE {(0,0)}, CCE {BB}".into())
}

fn matching_pennies() -> Outcome {
    let g = named::matching_pennies();
    only_points(&nash_set(&g), &[(rat(1, 2), rat(1, 2))])?;
    ensure(cce_polytope(&g).vertices == vec![JointDistribution::uniform()], "cce is not the uniform joint")?;
    Ok("NE {(1/2,1/2)}, CCE {uniform}".into())
}

fn coordination() -> Outcome {
    let g = Game::from_ints([2, 0, 0, 1, 2, 0, 0, 1]);
    only_points(&nash_set(&g), &[(rat(1, 1), rat(1, 1)), (rat(0, 1), rat(0, 1)), (rat(1, 3), rat(1, 3))])?;
    let poly = cce_polytope(&g);
    for cell in [Cell::AA, Cell::BB] {
        ensure(poly.vertices.contains(&JointDistribution::point_mass(cell)), format!("{cell} is not a vertex"))?;
    }
    Ok("NE {(0,0),(1/3,1/3),(1,1)}, AA and BB are vertices".into())
}

fn zero_game() -> Outcome {
    let g = Game::zero();
    let poly = cce_polytope(&g);
    let mut corners: Vec<JointDistribution> = Cell::ALL.iter().map(|&c| JointDistribution::point_mass(c)).collect();
    corners.sort();
    ensure(poly.vertices == corners, "cce vertices are not the simplex corners")?;
    ensure(poly.dimension == 3, format!("dimension {}", poly.dimension))?;
    let unit = NashSet::from_boxes(vec![NashBox::new(
        twoxtwo::nash::Interval::unit(),
        twoxtwo::nash::Interval::unit(),
    )]);
    ensure(nash_set(&g) == unit, "nash set is not the unit square")?;
    Ok("CCE = simplex (dim 3), NE = [0,1]^2".into())
}

fn ne_oracle(games: &[Game]) -> Outcome {
    let start = Instant::now();
    for (i, g) in games.iter().enumerate() {
        check_nash(&Library, g, GRID).map_err(|c| format!("game {i}: {c}"))?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(300), format!("took {elapsed:?}"))?;
    Ok(format!("{} games x {}^2 grid, 0 disagreements, {:.1?}", games.len(), GRID + 1, elapsed))
}

fn cce_oracle(games: &[Game]) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 1);
    let mut vertices = 0;
    for (i, g) in games.iter().enumerate() {
        check_cce(&Library, g, COMBINATIONS, &mut rng).map_err(|c| format!("game {i}: {c}"))?;
        vertices += cce_polytope(g).vertices.len();
    }
    Ok(format!("{} games, {vertices} vertices, {COMBINATIONS} combinations each, 0 failures", games.len()))
}

fn invariance() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 2);
    let random_rational = |rng: &mut ChaCha8Rng, lo: i64, hi: i64| {
        Rational::new(rng.random_range(lo..=hi), rng.random_range(1..=6)).expect("nonzero denominator")
    };
    for i in 0..INVARIANCE_PAIRS {
        let g = oracle::random_game(&mut rng);
        let player = Player::ALL[rng.random_range(0..2)];
        let scale = random_rational(&mut rng, 1, 30);
        let (a, b) = (random_rational(&mut rng, -30, 30), random_rational(&mut rng, -30, 30));
        let moved = g.transform_affine(player, &scale, [&a, &b]).map_err(|e| e.to_string())?;
        let m = MarginalPair::new(oracle::random_unit_rational(&mut rng), oracle::random_unit_rational(&mut rng))
            .expect("unit interval");
        let fail = |what: &str| format!("pair {i}: {what} changed for {g}");
        ensure(br_graph(&moved) == br_graph(&g), fail("br_graph"))?;
        ensure(embed(&moved) == embed(&g), fail("embed"))?;
        ensure(nash_set(&moved) == nash_set(&g), fail("nash_set"))?;
        ensure(cce_polytope(&moved).vertices == cce_polytope(&g).vertices, fail("cce vertices"))?;
        for s in Symmetry::ALL {
            let p = g.permute(s);
            let fail = |what: &str| format!("pair {i}: {what} not equivariant under {s:?}");
            ensure(br_graph(&p) == br_graph(&g).permute(s), fail("br_graph"))?;
            ensure(embed(&p) == embed(&g).permute(s), fail("embed"))?;
            ensure(nash_set(&p) == nash_set(&g).permute(s), fail("nash_set"))?;
            let mut moved_vertices: Vec<JointDistribution> =
                cce_polytope(&g).vertices.iter().map(|v| v.permute(s)).collect();
            moved_vertices.sort();
            ensure(cce_polytope(&p).vertices == moved_vertices, fail("cce vertices"))?;
            ensure(
                JointDistribution::product(&m).permute(s) == JointDistribution::product(&m.permute(s)),
                fail("product joint"),
            )?;
        }
    }
    Ok(format!("{INVARIANCE_PAIRS} affine pairs, 8 group elements each"))
}

fn sign(p: Preference) -> i64 {
    match p {
        Preference::A => 1,
        Preference::B => -1,
        Preference::Indifferent => 0,
    }
}

fn embedding_consistency() -> Outcome {
    let mut count = 0;
    for graph in BrGraph::all() {
        let [ra, rb, ca, cb] = graph.fields().map(sign);
        // Row advantage is g1(A,.) - g1(B,.), column advantage g2(.,A) - g2(.,B).
        let g = Game::from_ints([ra, rb, 0, 0, ca, 0, cb, 0]);
        ensure(br_graph(&g) == graph, format!("representative of {graph} has graph {}", br_graph(&g)))?;
        ensure(class_of_embedding(&embed(&g)) == br_class(&g), format!("class mismatch for {graph}"))?;
        ensure(br_class(&g) == class_of_br_graph(&graph), format!("class of {graph} differs from its game"))?;
        let point = EmbeddingPoint { row: Direction::from_ints(ra, rb), col: Direction::from_ints(ca, cb) };
        ensure(embed(&g) == point, format!("embedding of {graph}"))?;
        count += 1;
    }
    ensure(count == 81, format!("{count} graphs"))?;
    Ok("81/81 graphs".into())
}

fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden")
}

const GOLDEN: [(&str, &[&str]); 10] = [
    ("ordgraph", &["1", "2", "3", "4", "1", "3", "4", "2"]),
    ("brgraph", &["1", "-1", "-1", "1", "-1", "1", "1", "-1"]),
    ("table", &["2", "0", "0", "1", "2", "0", "0", "1"]),
    ("joint", &["0", "1/2", "1/2", "0"]),
    ("rowcond", &[".4", ".3", ".1", ".2"]),
    ("colcond", &[".4", ".3", ".1", ".2"]),
    ("marginal", &["1/10", "9/10"]),
    ("jointmarginal", &["1/100", "9/100", "9/100", "81/100"]),
    ("polytope", &["2", "0", "0", "1", "2", "0", "0", "1"]),
    ("embedding", &["2", "0", "0", "1", "2", "0", "0", "1"]),
];

fn render(kind: &str, format: &str, extra: &[&str], values: &[&str]) -> Result<String, String> {
    let mut args = vec!["render", "--kind", kind, "--format", format];
    args.extend_from_slice(extra);
    args.extend_from_slice(values);
    let (code, out, err) = run_cli(&args);
    ensure(code == 0, format!("render {kind} exited {code}: {err}"))?;
    Ok(out)
}

fn class_count(svg: &str, class: &str) -> Result<usize, String> {
    let doc = roxmltree::Document::parse(svg).map_err(|e| format!("malformed SVG: {e}"))?;
    Ok(doc.descendants().filter(|n| n.attribute("class") == Some(class)).count())
}

fn golden_figures() -> Outcome {
    let dir = golden_dir();
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    let mut checked = 0;
    for (kind, values) in GOLDEN {
        for format in ["svg", "tikz"] {
            let text = render(kind, format, &[], values)?;
            let again = render(kind, format, &[], values)?;
            ensure(text == again, format!("{kind} {format} differs between runs"))?;
            if format == "svg" {
                roxmltree::Document::parse(&text).map_err(|e| format!("{kind}: malformed SVG: {e}"))?;
            } else {
                ensure(twoxtwo::render::tikz::is_balanced(&text), format!("{kind}: unbalanced TikZ"))?;
            }
            let path = dir.join(format!("{kind}.{}", if format == "svg" { "svg" } else { "tex" }));
            if update {
                std::fs::create_dir_all(&dir).map_err(|e| e.to_string())?;
                std::fs::write(&path, &text).map_err(|e| e.to_string())?;
            } else {
                let golden = std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
                ensure(golden == text, format!("{} differs from the golden file", path.display()))?;
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} files byte-identical, SVG well-formed, TikZ balanced{}", if update { " (updated)" } else { "" }))
}

struct PolytopeCounts {
    vertices: usize,
    edges: usize,
    ne_points: usize,
    ne_segments: usize,
    ne_surface: bool,
}

fn polytope_counts(values: &[&str]) -> Result<PolytopeCounts, String> {
    let svg = render("polytope", "svg", &[], values)?;
    Ok(PolytopeCounts {
        vertices: class_count(&svg, "cce-vertex")?,
        edges: class_count(&svg, "cce-edge")?,
        ne_points: class_count(&svg, "ne-point")?,
        ne_segments: class_count(&svg, "ne-segment")?,
        ne_surface: class_count(&svg, "ne-surface")? > 0,
    })
}

fn check_polytope(name: &str, values: &[&str], expect: (usize, usize, usize, usize, bool)) -> Result<(), String> {
    let c = polytope_counts(values)?;
    let got = (c.vertices, c.edges, c.ne_points, c.ne_segments, c.ne_surface);
    ensure(got == expect, format!("{name}: (vertices, edges, points, segments, surface) = {got:?}, expected {expect:?}"))
}

fn coordination_panels() -> Outcome {
    let g = ["2", "0", "0", "1", "2", "0", "0", "1"];
    let table = render("table", "svg", &[], &g)?;
    ensure(class_count(&table, "payoff")? == 8, "payoff table does not show 8 payoffs")?;
    check_polytope("equilibria panel", &g, (5, 9, 3, 0, false))?;
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let pts = dir.path().join("coordinationpoint.dat");
    let (ra, ca) = embed(&Game::from_ints([2, 0, 0, 1, 2, 0, 0, 1])).angles().ok_or("coordination has no angles")?;
    std::fs::write(&pts, write_points(&[(ra, ca)])).map_err(|e| e.to_string())?;
    let flags = ["--no-axes-labels", "--no-tick-labels", "--no-best-response-names", "--points", pts.to_str().unwrap()];
    let emb = render("embedding", "svg", &flags, &[])?;
    ensure(class_count(&emb, "marker")? == 1, "embedding panel should have one marker")?;
    for hidden in ["axis-label", "tick-label", "class-name"] {
        ensure(class_count(&emb, hidden)? == 0, format!("embedding panel shows {hidden}"))?;
    }
    Ok("payoffs 8 entries; polytope 5 vertices / 9 edges / 3 NE; embedding 1 marker, no labels".into())
}

fn class_gallery() -> Outcome {
    // Expected counts were computed with an independent script before freezing.
    check_polytope("(a)", &["0", "1", "1", "0", "0", "1", "1", "0"], (5, 9, 3, 0, false))?;
    check_polytope("(b)", &["+1", "-1", "-1", "+1", "+1", "-1", "0", "0"], (3, 3, 1, 1, false))?;
    check_polytope("(c)", &["+1", "-1", "-1", "+1", "0", "0", "0", "0"], (4, 6, 0, 3, false))?;
    check_polytope("(d)", &["0", "0", "0", "0", "0", "0", "0", "0"], (4, 6, 0, 0, true))?;
    let names = [("0 1 1 0 0 1 1 0", "coordination", 4), ("1 -1 -1 1 1 -1 0 0", "safety", 3), ("1 -1 -1 1 0 0 0 0", "horseplay", 2), ("0 0 0 0 0 0 0 0", "zero", 0)];
    for (payoffs, name, edges) in names {
        let values: Vec<&str> = payoffs.split(' ').collect();
        let g = Game::parse_flat(&values).map_err(|e| e.to_string())?;
        ensure(br_class(&g).name == name, format!("{payoffs}: class {}, expected {name}", br_class(&g)))?;
        let svg = render("brgraph", "svg", &[], &values)?;
        let drawn = class_count(&svg, "row-edge")? + class_count(&svg, "col-edge")?;
        ensure(drawn == edges, format!("{payoffs}: {drawn} best-response edges, expected {edges}"))?;
    }
    Ok("(a) 5v/9e/3pts (b) 3v/3e/1pt+1seg (c) 4v/6e/3seg (d) 4v/6e/surface; captions match".into())
}

fn file_formats() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 3);
    let pts: Vec<(f64, f64)> = (0..50).map(|_| (rng.random_range(0.0..360.0), rng.random_range(0.0..360.0))).collect();
    ensure(parse_points(&write_points(&pts)).map_err(|e| e.to_string())? == pts, "points do not round-trip")?;
    let rows: Vec<Vec<f64>> = (0..7).map(|_| (0..9).map(|_| rng.random_range(-5.0..5.0)).collect()).collect();
    let heat = Heatmap::new(rows).map_err(|e| e.to_string())?;
    ensure(parse_heatmap(&write_heatmap(&heat)).map_err(|e| e.to_string())? == heat, "heatmap does not round-trip")?;
    ensure(parse_heatmap("1 2\n3\n").is_err(), "ragged heatmap accepted")?;
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let (p, m) = (dir.path().join("pts.dat"), dir.path().join("heat.dat"));
    std::fs::write(&p, write_points(&pts)).map_err(|e| e.to_string())?;
    std::fs::write(&m, write_heatmap(&heat)).map_err(|e| e.to_string())?;
    let out = dir.path().join("emb.svg");
    let (code, _, err) = run_cli(&["render", "--kind", "embedding", "--points", p.to_str().unwrap(), "--matrix", m.to_str().unwrap(), "-o", out.to_str().unwrap()]);
    ensure(code == 0, format!("embedding render exited {code}: {err}"))?;
    let svg = std::fs::read_to_string(&out).map_err(|e| e.to_string())?;
    ensure(class_count(&svg, "marker")? == 50 && class_count(&svg, "heat")? == 63, "embedding file content")?;
    std::fs::write(&m, "1 2\n3\n").map_err(|e| e.to_string())?;
    let (code, _, err) = run_cli(&["render", "--kind", "embedding", "--matrix", m.to_str().unwrap()]);
    ensure(code == 2 && err.contains("rectangular"), format!("ragged matrix: exit {code}, {err}"))?;
    Ok("50 points and a 7x9 heatmap round-trip; ragged matrix rejected".into())
}

fn cli_contract() -> Outcome {
    let (code, out, _) = run_cli(&["analyze", "-1", "-3", "0", "-2", "-1", "0", "-3", "-2"]);
    ensure(code == 0 && out.contains("nash.components 1\nnash.component point 0 0 0 0\n"), "PD report")?;
    let (code, out, _) = run_cli(&["analyze", "2", "0", "0", "1", "2", "0", "0", "1"]);
    ensure(code == 0 && out.contains("nash.components 3\n"), "coordination report")?;
    let (code, out, _) = run_cli(&["analyze", "0", "0", "0", "0", "0", "0", "0", "0"]);
    ensure(code == 0 && out.contains("nash.component box 0 1 0 1\n") && out.contains("cce.vertices 4\n"), "zero report")?;
    let (code, _, err) = run_cli(&["analyze", "1", "2", "3", "4", "5", "6", "7", "z/3"]);
    ensure(code == 2 && err.contains("z/3"), format!("bad literal: exit {code}, {err}"))?;
    let (code, _, _) = run_cli(&["verify", "--trials", "0"]);
    ensure(code == 2, format!("verify --trials 0 exited {code}"))?;
    let (code, out, _) = run_cli(&["verify", "--seed", "7", "--trials", "100"]);
    ensure(code == 0 && out.trim_end().ends_with("PASS 100/100"), format!("verify: exit {code}, {out}"))?;
    Ok("analyze examples, exit codes, verify PASS 100/100".into())
}

/// The library with one fault injected.
enum Broken {
    /// Drops every mixed equilibrium.
    PureOnly,
    /// Reads the deviation constraints with the wrong sign.
    FlippedSign,
}

fn is_pure(c: &NashBox) -> bool {
    let corner = |x: &Rational| x.is_zero() || *x == Rational::one();
    c.p.is_point() && c.q.is_point() && corner(&c.p.lo) && corner(&c.q.lo)
}

impl Solver for Broken {
    fn is_nash(&self, game: &Game, m: &MarginalPair) -> bool {
        Library.is_nash(game, m)
    }
    fn nash_set(&self, game: &Game) -> NashSet {
        let set = nash_set(game);
        match self {
            Broken::PureOnly => NashSet::from_boxes(set.components().iter().filter(|c| is_pure(c)).cloned().collect()),
            Broken::FlippedSign => set,
        }
    }
    fn cce_polytope(&self, game: &Game) -> CcePolytope {
        Library.cce_polytope(game)
    }
    fn joint_in_cce(&self, game: &Game, joint: &JointDistribution) -> bool {
        match self {
            Broken::PureOnly => Library.joint_in_cce(game, joint),
            Broken::FlippedSign => cce_constraints(game).iter().all(|c| !c.gain(joint).is_negative()),
        }
    }
    fn embed(&self, game: &Game) -> EmbeddingPoint {
        Library.embed(game)
    }
    fn class_of_embedding(&self, point: &EmbeddingPoint) -> BrClass {
        Library.class_of_embedding(point)
    }
}

fn negative_control() -> Outcome {
    let mut caught = Vec::new();
    for broken in [Broken::PureOnly, Broken::FlippedSign] {
        let mut out = Vec::new();
        let err = twoxtwo_cli::verify(&broken, 0, 200, 20, &mut out).err().ok_or("broken solver passed")?;
        ensure(err.exit_code() == twoxtwo_cli::EXIT_FAILURE, format!("exit code {}", err.exit_code()))?;
        let text = String::from_utf8(out).map_err(|e| e.to_string())?;
        let line = text.lines().find(|l| l.starts_with("counterexample ")).ok_or("no counterexample printed")?;
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let game = Game::parse_flat(&tokens[tokens.len().saturating_sub(8)..])
            .map_err(|e| format!("counterexample is not a payoff tuple: {e}"))?;
        let genuine = match broken {
            Broken::PureOnly => nash_set(&game).components().iter().any(|c| !is_pure(c)),
            Broken::FlippedSign => cce_polytope(&game).vertices.iter().any(|v| !broken.joint_in_cce(&game, v)),
        };
        ensure(genuine, format!("counterexample {game} does not expose the fault"))?;
        caught.push(format!("[{game}]"));
    }
    Ok(format!("pure-only and flipped-sign solvers exit 1 with counterexamples {}", caught.join(" ")))
}

fn main() {
    let games = oracle_games();
    let criteria: Vec<Criterion> = vec![
        ("census exactness", Box::new(census)),
        ("prisoner's dilemma", Box::new(prisoners_dilemma)),
        ("matching pennies", Box::new(matching_pennies)),
        ("coordination", Box::new(coordination)),
        ("all-zero game", Box::new(zero_game)),
        ("NE oracle suite", Box::new(|| ne_oracle(&games))),
        ("CCE oracle suite", Box::new(|| cce_oracle(&games))),
        ("invariance suite", Box::new(invariance)),
        ("embedding consistency", Box::new(embedding_consistency)),
        ("renderer golden files", Box::new(golden_figures)),
        ("coordination panels", Box::new(coordination_panels)),
        ("class gallery panels", Box::new(class_gallery)),
        ("point and heatmap formats", Box::new(file_formats)),
        ("cli contract", Box::new(cli_contract)),
        ("verify negative control", Box::new(negative_control)),
    ];
    let mut failed = 0;
    for (name, check) in &criteria {
        let start = Instant::now();
        let result = std::panic::catch_unwind(std::panic::AssertUnwindSafe(check))
            .unwrap_or_else(|_| Err("panicked".into()));
        match result {
            Ok(detail) => println!("PASS {name}: {detail} [{:.1?}]", start.elapsed()),
            Err(reason) => {
                failed += 1;
                println!("FAIL {name}: {reason}");
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
