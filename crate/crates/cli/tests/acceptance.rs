//! Acceptance suite: one PASS/FAIL line per criterion, each with its time
//! budget. Exits nonzero if any criterion fails.

use std::collections::BTreeSet;
use std::io::Write;
use std::process::{Command, Stdio};
use std::time::{Duration, Instant};

use betapath::beta::{
    dual_transform, enumerate_beta_cycles, enumerate_beta_paths, is_beta_cycle, is_beta_path,
    is_increasing_sequence, reduce_paths_to_cycle,
};
use betapath::generators::{fig1, loose_path, pasch, random_linear, sunflower, triangle2};
use betapath::oracle;
use betapath::pathsearch::{
    adversarial_min_max, derive_edges, is_increasing, longest_increasing_length, longest_increasing_path, satisfies,
    DEFAULT_ADVERSARIAL_BOUND,
};
use betapath::properties::{
    p2_duality_check, peel_p2_star, peel_p2_star_in_order, peel_p_ell, peel_p_ell_in_order,
};
use betapath::skeleton::{canonical_generator, generator_cycle_certificates};
use betapath::{dual, double_dual_correspondence, BetaSequence, Hypergraph, Labeling, Mode, RootRule, Target, Through};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn single_edge() -> Hypergraph {
    Hypergraph::from_edges(&[vec!["a", "b", "c"]]).unwrap()
}

/// A hypergraph with `m` distinct random edges of sizes 2..=3 on `n` vertices.
fn random_hypergraph(rng: &mut ChaCha8Rng, n: usize, m: usize) -> Hypergraph {
    let mut edges: Vec<Vec<usize>> = Vec::new();
    let mut attempts = 0;
    while edges.len() < m && attempts < 1000 {
        attempts += 1;
        let size = rng.gen_range(2..=3.min(n));
        let mut e: Vec<usize> = rand::seq::index::sample(rng, n, size).into_vec();
        e.sort_unstable();
        if !edges.contains(&e) {
            edges.push(e);
        }
    }
    Hypergraph::from_indices((0..n).map(|i| format!("x{i}")).collect(), edges, None).unwrap()
}

/// Linear instances trimmed to minimum degree 2.
fn cyclic_linear(rng: &mut ChaCha8Rng, k: usize, n: usize, m: usize) -> Option<Hypergraph> {
    let h = random_linear(k, n, m, rng.gen()).ok()?.min_degree_core(2);
    (h.edge_count() > 0).then_some(h)
}

fn families() -> Vec<(&'static str, Hypergraph)> {
    vec![
        ("pasch", pasch()),
        ("triangle2", triangle2()),
        ("fig1", fig1()),
        ("single_edge", single_edge()),
        ("loose_path(3,3)", loose_path(3, 3).unwrap()),
        ("loose_path(2,5)", loose_path(2, 5).unwrap()),
        ("loose_path(4,2)", loose_path(4, 2).unwrap()),
        ("sunflower(3,3)", sunflower(3, 3).unwrap()),
        ("sunflower(2,4)", sunflower(2, 4).unwrap()),
        ("random_linear(3,9,6,1)", random_linear(3, 9, 6, 1).unwrap()),
    ]
}

fn c1_dual_involution() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut done = 0;
    while done < 100 {
        let k = [2, 3, 4][done % 3];
        let n = rng.gen_range(k + 6..=30);
        let m = rng.gen_range(n / 2..=n);
        let Some(h) = cyclic_linear(&mut rng, k, n, m) else { continue };
        let h = h.dual_ready();
        ensure((0..h.vertex_count()).all(|v| h.degree(v) >= 2), || "cleanup left a low-degree vertex".into())?;
        let iso = double_dual_correspondence(&h).map_err(|e| e.to_string())?;
        for v in 0..h.vertex_count() {
            for e in 0..h.edge_count() {
                ensure(h.contains(e, v) == iso.double_dual.contains(iso.edge_map[e], iso.vertex_map[v]), || {
                    format!("incidence ({v}, {e}) does not commute")
                })?;
            }
        }
        done += 1;
    }
    Ok(format!("{done} instances"))
}

fn c2_pair_reduction() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut triples = 0;
    let mut instances = 0;
    while triples < 200 {
        instances += 1;
        ensure(instances < 500, || format!("only {triples} triples generated"))?;
        let k = rng.gen_range(2..=3);
        let n = rng.gen_range(8..=14);
        let Some(h) = cyclic_linear(&mut rng, k, n, n) else { continue };
        for u in 0..h.vertex_count() {
            let paths = enumerate_beta_paths(&h, u, 300);
            for (p1, p2) in oracle::reduction_inputs(&paths).into_iter().take(5) {
                let f = p1.last_edge().unwrap();
                let (v, w) = (p1.last_vertex(), p2.last_vertex());
                let c = reduce_paths_to_cycle(&h, &p1, &p2).map_err(|e| e.to_string())?;
                ensure(is_beta_cycle(&h, &c).unwrap(), || "output is not a β-cycle".into())?;
                ensure(c.edges()[0] == f, || "cycle does not start at f".into())?;
                // f lies between the last listed vertex and the first.
                ensure(c.vertices()[0] == v && *c.vertices().last().unwrap() == w, || {
                    "v and w are not adjacent to f".into()
                })?;
                ensure(c.edges().len() >= 3, || "cycle shorter than 3".into())?;
                triples += 1;
            }
        }
    }
    Ok(format!("{triples} triples from {instances} instances"))
}

fn c3_cycle_enumeration() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut cases: Vec<(String, Hypergraph)> = families()
        .into_iter()
        .filter(|(_, h)| h.edge_count() <= 6)
        .map(|(n, h)| (n.to_string(), h))
        .collect();
    for i in 0..50 {
        let n = rng.gen_range(4..=8);
        let m = rng.gen_range(1..=6);
        cases.push((format!("random#{i}"), random_hypergraph(&mut rng, n, m)));
    }
    for (name, h) in &cases {
        let expected = oracle::beta_cycles(h);
        let found = enumerate_beta_cycles(h, Through::All, usize::MAX);
        let found: BTreeSet<_> = found.cycles.into_iter().collect();
        ensure(found == expected, || format!("{name}: {} found, {} expected", found.len(), expected.len()))?;
    }
    let count = |h: &Hypergraph| enumerate_beta_cycles(h, Through::All, 100).cycles.len();
    ensure(count(&triangle2()) == 1, || "triangle count is not 1".into())?;
    ensure(count(&loose_path(3, 3).unwrap()) == 0, || "loose path count is not 0".into())?;
    ensure(count(&single_edge()) == 0, || "single edge count is not 0".into())?;
    Ok(format!("{} instances", cases.len()))
}

fn c4_peeling() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut cases: Vec<Hypergraph> = families().into_iter().map(|(_, h)| h).collect();
    for _ in 0..40 {
        let n = rng.gen_range(4..=12);
        let m = rng.gen_range(1..=12);
        cases.push(random_hypergraph(&mut rng, n, m));
    }
    let mut checks = 0;
    for h in &cases {
        for d in 1..=3 {
            let edge_witness = peel_p2_star(h, d).unwrap().witness;
            if h.edge_count() <= 12 {
                let (expected, closed) = oracle::largest_p2_star_set(h, d);
                ensure(closed && edge_witness == expected, || "P_2* witness is not maximal".into())?;
            }
            for ell in 1..=3 {
                let witness = peel_p_ell(h, ell, d).unwrap().witness;
                if h.vertex_count() <= 12 {
                    let (expected, closed) = oracle::largest_p_ell_set(h, ell, d);
                    ensure(closed && witness == expected, || format!("P_{ell} witness (d = {d}) is not maximal"))?;
                }
                for _ in 0..20 {
                    let mut order: Vec<usize> = (0..h.vertex_count()).collect();
                    order.shuffle(&mut rng);
                    ensure(peel_p_ell_in_order(h, ell, d, &order) == witness, || "P_ell peeling is order dependent".into())?;
                }
                checks += 1;
            }
            for _ in 0..20 {
                let mut order: Vec<usize> = (0..h.edge_count()).collect();
                order.shuffle(&mut rng);
                ensure(peel_p2_star_in_order(h, d, &order) == edge_witness, || "P_2* peeling is order dependent".into())?;
            }
        }
    }
    ensure(peel_p_ell(&pasch(), 2, 2).unwrap().witness.len() == 6, || "Pasch witness is not all 6 vertices".into())?;
    ensure(peel_p_ell(&sunflower(3, 3).unwrap(), 2, 2).unwrap().witness.is_empty(), || "sunflower witness is not empty".into())?;
    Ok(format!("{} instances, {checks} (ell, d) checks", cases.len()))
}

fn c5_duality() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut done = 0;
    let mut nonempty = 0;
    while done < 100 {
        let k = rng.gen_range(2..=4);
        let n = rng.gen_range(k + 4..=20);
        let m = rng.gen_range(2..=n);
        let Ok(h) = random_linear(k, n, m, rng.gen()) else { continue };
        let h = h.dual_ready();
        for d in 1..=3 {
            let check = p2_duality_check(&h, d).map_err(|e| e.to_string())?;
            ensure(check.holds, || format!("mismatch: {:?}", check))?;
            nonempty += usize::from(!check.dual_witness.is_empty());
        }
        done += 1;
    }
    Ok(format!("{done} instances x 3 thresholds, {nonempty} nonempty witnesses"))
}

fn c6_canonical_generator() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut cycle_free = 0;
    let mut certified = 0;
    let mut cases: Vec<Hypergraph> = families().into_iter().map(|(_, h)| h).filter(|h| h.is_linear()).collect();
    for _ in 0..150 {
        let k = rng.gen_range(2..=3);
        let n = rng.gen_range(5..=10);
        let m = rng.gen_range(1..=7);
        if let Ok(h) = random_linear(k, n, m, rng.gen()) {
            cases.push(h.min_degree_core(rng.gen_range(1..=2)));
        }
    }
    for h in cases.iter().filter(|h| h.edge_count() <= 7) {
        let t = canonical_generator(h, &RootRule::LeastVertex).unwrap();
        if enumerate_beta_cycles(h, Through::All, 1).cycles.is_empty() {
            ensure(t.max_fiber() <= 1, || format!("cycle-free instance with fibers {:?}", t.fiber_sizes()))?;
            cycle_free += 1;
        }
        for f in 0..h.edge_count() {
            let tf = t.fiber(f).len();
            if tf < 2 {
                continue;
            }
            let certs = generator_cycle_certificates(h, &t, f).map_err(|e| e.to_string())?;
            ensure(certs.len() == tf * (tf - 1) / 2, || "wrong number of certificates".into())?;
            for c in &certs {
                ensure(c.first != c.second, || "certificate endpoints coincide".into())?;
                ensure(is_beta_cycle(h, &c.cycle).unwrap() && c.cycle.edges().contains(&f), || {
                    "certificate is not a β-cycle through f".into()
                })?;
            }
            certified += certs.len();
        }
    }
    Ok(format!("{cycle_free} cycle-free instances, {certified} certificates"))
}

fn c7_path_search() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut cases: Vec<(usize, Hypergraph)> = families()
        .into_iter()
        .filter(|(_, h)| h.edge_count() <= 8)
        .map(|(_, h)| (h.edge(0).len(), h))
        .collect();
    for i in 0..30 {
        let k = 2 + i % 2;
        let n = rng.gen_range(5..=10);
        let m = rng.gen_range(1..=8);
        let h = if i % 3 == 0 {
            random_hypergraph(&mut rng, n, m)
        } else {
            match random_linear(k, n, m, rng.gen()) {
                Ok(h) => h,
                Err(_) => random_hypergraph(&mut rng, n, m),
            }
        };
        cases.push((k, h));
    }
    let mut comparisons = 0;
    for (k, h) in &cases {
        for mode in [Mode::Full, Mode::Skip, Mode::Edge] {
            let n = match mode.target() {
                Target::Vertices => h.vertex_count(),
                Target::Edges => h.edge_count(),
            };
            for trial in 0..5 {
                let mut labels: Vec<u64> = (1..=n as u64).collect();
                if trial > 0 {
                    labels.shuffle(&mut rng);
                }
                let phi = Labeling::total(mode.target(), labels).unwrap();
                let expected = oracle::longest_loose_path(h, *k, &phi, mode);
                let p = longest_increasing_path(h, *k, &phi, mode).map_err(|e| e.to_string())?;
                ensure(p.edge_count() == expected, || format!("{mode:?}: {} vs oracle {expected}", p.edge_count()))?;
                if expected > 0 {
                    ensure(satisfies(&p, &phi, mode).unwrap(), || "returned path violates its predicate".into())?;
                }
                comparisons += 1;
            }
        }
    }

    let mut pairs = 0;
    let mut full_count = 0;
    while pairs < 10_000 {
        let h = random_linear(3, 12, 10, rng.gen()).unwrap();
        let mut labels: Vec<u64> = (1..=h.vertex_count() as u64).collect();
        labels.shuffle(&mut rng);
        let phi = Labeling::total(Target::Vertices, labels).unwrap();
        let mut seq = vec![rng.gen_range(0..h.vertex_count())];
        loop {
            let last = *seq.last().unwrap();
            let options: Vec<usize> = h
                .star(last)
                .iter()
                .copied()
                .filter(|&e| h.edge(e).iter().all(|&v| v == last || !seq.contains(&v)))
                .collect();
            let Some(&e) = options.choose(&mut rng) else { break };
            let mut rest: Vec<usize> = h.edge(e).iter().copied().filter(|&v| v != last).collect();
            rest.shuffle(&mut rng);
            seq.extend(rest);
            if rng.gen_bool(0.4) {
                break;
            }
        }
        if seq.len() < 3 {
            continue;
        }
        let p = derive_edges(&h, 3, &seq).map_err(|e| e.to_string())?;
        if is_increasing(&p, &phi, Mode::Full).unwrap() {
            full_count += 1;
            ensure(is_increasing(&p, &phi, Mode::Skip).unwrap(), || "full-increasing path is not skip-increasing".into())?;
        }
        pairs += 1;
    }
    Ok(format!(
        "{} instances, {comparisons} oracle comparisons; {pairs} pairs ({full_count} full-increasing)",
        cases.len()
    ))
}

fn c8_adversarial() -> Outcome {
    let mut seen = BTreeSet::new();
    for _ in 0..3 {
        let (tri, phi_tri) = adversarial_min_max(&triangle2(), 2, Mode::Full, DEFAULT_ADVERSARIAL_BOUND).map_err(|e| e.to_string())?;
        let (one, phi_one) = adversarial_min_max(&single_edge(), 3, Mode::Edge, DEFAULT_ADVERSARIAL_BOUND).map_err(|e| e.to_string())?;
        ensure(tri == 3, || format!("triangle min-max is {tri}"))?;
        ensure(one == 1, || format!("single-edge min-max is {one}"))?;
        // The value is attained by the returned labeling.
        let attained = longest_increasing_length(&triangle2(), 2, &phi_tri, Mode::Full).unwrap();
        ensure(attained == 2, || "triangle labeling does not attain the value".into())?;
        seen.insert((tri, phi_tri.labels().to_vec(), one, phi_one.labels().to_vec()));
    }
    ensure(seen.len() == 1, || "results differ between runs".into())?;
    Ok("triangle2 = 3, single edge = 1, identical over 3 runs".into())
}

fn c9_dual_transform() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut done = 0;
    let mut increasing = 0;
    while done < 100 {
        let n = rng.gen_range(5..=12);
        let m = rng.gen_range(3..=10);
        let h = random_hypergraph(&mut rng, n, m).dual_ready();
        if h.edge_count() == 0 {
            continue;
        }
        let Some(p) = oracle::random_beta_path(&h, &mut rng, 6) else { continue };
        if p.vertices().len() + p.edges().len() < 3 {
            continue;
        }
        let d = dual(&h).map_err(|e| e.to_string())?;
        // Half the labelings are increasing along the path by construction.
        let mut labels: Vec<u64> = (1..=h.vertex_count() as u64).collect();
        labels.shuffle(&mut rng);
        if rng.gen_bool(0.5) {
            let mut along: Vec<u64> = p.vertices().iter().map(|&v| labels[v]).collect();
            along.sort_unstable();
            for (&v, &l) in p.vertices().iter().zip(&along) {
                labels[v] = l;
            }
        }
        let phi = Labeling::total(Target::Vertices, labels.clone()).unwrap();
        let mut induced = vec![0; h.vertex_count()];
        for v in 0..h.vertex_count() {
            induced[d.correspondence.dual_edge(v)] = labels[v];
        }
        let psi = Labeling::total(Target::Edges, induced).unwrap();

        let image: BetaSequence = dual_transform(&h, &d, &p).map_err(|e| e.to_string())?;
        ensure(is_beta_path(&d.hypergraph, &image).unwrap(), || "image is not a β-path in the dual".into())?;
        if is_increasing_sequence(&p, &phi).unwrap() {
            increasing += 1;
            ensure(is_increasing_sequence(&image, &psi).unwrap(), || "image is not increasing".into())?;
        }
        done += 1;
    }
    Ok(format!("{done} paths, {increasing} increasing"))
}

fn run_cli(args: &[&str], stdin: &[u8]) -> (i32, Vec<u8>) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_betapath"))
        .args(args)
        .env_remove("BETAPATH_LIMIT")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::null())
        .spawn()
        .expect("spawn betapath");
    child.stdin.take().unwrap().write_all(stdin).unwrap();
    let out = child.wait_with_output().unwrap();
    (out.status.code().unwrap_or(-1), out.stdout)
}

fn c10_cli_determinism() -> Outcome {
    let pipelines = || -> Vec<(i32, Vec<u8>)> {
        let (s1, pasch) = run_cli(&["gen", "--family", "pasch"], b"");
        let (s2, peel) = run_cli(&["peel", "--ell", "2", "--d", "2"], &pasch);
        let (s3, loose) = run_cli(&["gen", "--family", "loose_path", "--k", "3", "--m", "3"], b"");
        let (s4, cycles) = run_cli(&["beta-cycles", "--through", "all"], &loose);
        let (s5, bad) = run_cli(&["validate"], b"{\"vertices\": [\"a\",");
        vec![(s1.max(s2), peel), (s3.max(s4), cycles), (s5, bad)]
    };
    let first = pipelines();
    for _ in 0..2 {
        ensure(pipelines() == first, || "output differs between runs".into())?;
    }
    let json = |bytes: &[u8]| serde_json::from_slice::<serde_json::Value>(bytes).map_err(|e| e.to_string());
    ensure(first.iter().all(|(_, out)| out.ends_with(b"\n")), || "output is not newline-terminated".into())?;
    let peel = json(&first[0].1)?;
    ensure(first[0].0 == 0 && peel["witness"].as_array().map(Vec::len) == Some(6), || "Pasch peel is not all 6 vertices".into())?;
    let cycles = json(&first[1].1)?;
    ensure(first[1].0 == 0 && cycles["cycles"].as_array().is_some_and(|c| c.is_empty()), || "loose path has cycles".into())?;
    let err = json(&first[2].1)?;
    ensure(first[2].0 == 2 && err["error"] == "ParseError", || format!("malformed input gave status {}", first[2].0))?;
    Ok("3 pipelines byte-identical over 3 runs".into())
}

fn main() {
    type Criterion = (usize, &'static str, u64, fn() -> Outcome);
    let criteria: [Criterion; 10] = [
        (1, "dual involution", 5, c1_dual_involution),
        (2, "path pair reduction to β-cycles", 10, c2_pair_reduction),
        (3, "β-cycle enumeration vs brute force", 60, c3_cycle_enumeration),
        (4, "peeling maximality and confluence", 60, c4_peeling),
        (5, "P_2 / P_2* duality", 30, c5_duality),
        (6, "canonical generator", 60, c6_canonical_generator),
        (7, "path search vs exhaustive enumeration", 120, c7_path_search),
        (8, "adversarial oracle", 10, c8_adversarial),
        (9, "dual transform of β-paths", 10, c9_dual_transform),
        (10, "CLI determinism", 5, c10_cli_determinism),
    ];
    let mut failed = 0;
    for (id, name, limit, check) in criteria {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let budget = Duration::from_secs(limit);
        let (verdict, detail) = match outcome {
            Ok(_) if elapsed > budget => ("FAIL", "over time budget".to_string()),
            Ok(detail) => ("PASS", detail),
            Err(why) => ("FAIL", why),
        };
        if verdict == "FAIL" {
            failed += 1;
        }
        println!(
            "{verdict} [{id:>2}] {name}: {detail} ({:.2} s, limit {limit} s)",
            elapsed.as_secs_f64()
        );
    }
    println!("acceptance: {} passed, {failed} failed", 10 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
