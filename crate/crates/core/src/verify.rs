//! The reproduction suite: every headline claim checked exactly, each within
//! a wall-clock budget.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bounds::{d_regular_gamma2_upper, moore_bound};
use crate::constructions::{
    blow_up, construct_gamma2, construct_gamma3, projective_plane_incidence, random_bridged_cubic,
    random_decomposed_regular,
};
use crate::data;
use crate::decompose::{eliminate_bridges, petersen_decompose};
use crate::graph::{find_bridges, girth, is_isomorphic, Graph};
use crate::search::{exhaustive_gamma, max_partition_weight, SearchOptions};
use crate::solver::{min_chord_cycle, min_chord_cycle_all_k, oracle_min_chord_cycle_all_k};

#[derive(Debug, Clone, Serialize)]
pub struct CriterionReport {
    pub id: usize,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    #[serde(rename = "elapsed_ms")]
    #[serde(serialize_with = "millis")]
    pub elapsed: Duration,
    #[serde(rename = "budget_ms")]
    #[serde(serialize_with = "millis")]
    pub budget: Duration,
}

fn millis<S: serde::Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_u128(d.as_millis())
}

impl std::fmt::Display for CriterionReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "[{}] {:>2} {} ({:.2}s / {}s): {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.title,
            self.elapsed.as_secs_f64(),
            self.budget.as_secs(),
            self.detail
        )
    }
}

type Check = fn() -> Result<String, String>;

pub struct Criterion {
    pub id: usize,
    pub title: &'static str,
    pub budget: Duration,
    check: Check,
}

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

pub fn criteria() -> Vec<Criterion> {
    let c = |id, title, secs, check| Criterion {
        id,
        title,
        budget: Duration::from_secs(secs),
        check,
    };
    vec![
        c(
            1,
            "two-chord construction at l=1 is the Heawood graph",
            1,
            heawood_identification,
        ),
        c(2, "two-chord construction values 4l+2", 5, gamma2_values),
        c(
            3,
            "three-chord construction values 2l+2 and chord parity",
            5,
            gamma3_values,
        ),
        c(4, "blow-up values", 10, blowup_values),
        c(5, "projective plane incidence graphs", 5, projective_planes),
        c(6, "exhaustive gamma tables", 120, exhaustive_tables),
        c(
            7,
            "solver agrees with cycle enumeration",
            120,
            solver_oracle,
        ),
        c(
            8,
            "two-chord upper bound on random instances",
            120,
            upper_bound_property,
        ),
        c(
            9,
            "cycle-partition weight maximum k²/2",
            60,
            partition_tightness,
        ),
        c(
            10,
            "decomposition and bridge rewiring",
            60,
            decomposition_and_rewiring,
        ),
        c(
            11,
            "Moore bounds and the Tutte–Coxeter girth",
            1,
            moore_bounds,
        ),
    ]
}

pub fn run(criterion: &Criterion) -> CriterionReport {
    let started = Instant::now();
    let outcome = catch_unwind(AssertUnwindSafe(criterion.check)).unwrap_or_else(|payload| {
        let msg = payload
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| payload.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_else(|| "panic".into());
        Err(format!("panicked: {msg}"))
    });
    let elapsed = started.elapsed();
    let (mut passed, mut detail) = match outcome {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    if passed && elapsed > criterion.budget {
        passed = false;
        detail = format!("over time budget; {detail}");
    }
    CriterionReport {
        id: criterion.id,
        title: criterion.title,
        passed,
        detail,
        elapsed,
        budget: criterion.budget,
    }
}

/// Runs every criterion in order.
pub fn run_suite() -> Vec<CriterionReport> {
    criteria().iter().map(run).collect()
}

fn heawood_identification() -> Result<String, String> {
    let dg = construct_gamma2(1).map_err(|e| e.to_string())?;
    let g = dg.graph();
    ensure!(g.n() == 14, "{} vertices", g.n());
    ensure!(girth(g) == Some(6), "girth {:?}", girth(g));
    ensure!(
        is_isomorphic(g, &data::heawood()) == Ok(true),
        "not isomorphic to Heawood"
    );
    let r = min_chord_cycle(&dg, 2);
    ensure!(r.length == 6, "solver gives {}", r.length);
    Ok("n=14, girth 6, Heawood, length 6".into())
}

fn gamma2_values() -> Result<String, String> {
    let mut seen = Vec::new();
    for l in 1..=3 {
        let dg = construct_gamma2(l).map_err(|e| e.to_string())?;
        let r = min_chord_cycle(&dg, 2);
        r.check(&dg)?;
        ensure!(
            r.length == 4 * l + 2,
            "l={l}: length {} != {}",
            r.length,
            4 * l + 2
        );
        seen.push(format!("n={} → {}", dg.n(), r.length));
    }
    Ok(seen.join(", "))
}

fn gamma3_values() -> Result<String, String> {
    let mut seen = Vec::new();
    for l in 1..=3 {
        let dg = construct_gamma3(l).map_err(|e| e.to_string())?;
        let all = min_chord_cycle_all_k(&dg, 4);
        for r in &all {
            r.check(&dg)?;
            ensure!(
                r.chords_used % 2 == 0,
                "l={l} k={}: witness uses {} chords",
                r.budget,
                r.chords_used
            );
        }
        ensure!(
            all[3].length == 2 * l + 2,
            "l={l}: k=3 length {}",
            all[3].length
        );
        ensure!(
            all[2].length == 2 * l + 2,
            "l={l}: k=2 length {}",
            all[2].length
        );
        seen.push(format!("n={} → {}", dg.n(), all[3].length));
    }
    Ok(seen.join(", "))
}

fn blowup_values() -> Result<String, String> {
    let k4 = Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
        .map_err(|e| e.to_string())?;
    let cases = [
        ("Petersen", data::petersen(), 60, 4),
        ("K4", k4, 24, 2),
        ("Heawood", data::heawood(), 84, 5),
    ];
    let mut seen = Vec::new();
    for (name, base, n, k) in cases {
        let dg = blow_up(&base).map_err(|e| e.to_string())?;
        ensure!(dg.n() == n, "{name}: {} vertices", dg.n());
        let r = min_chord_cycle(&dg, k);
        r.check(&dg)?;
        ensure!(r.length == 6, "{name}: k={k} length {}", r.length);
        seen.push(format!("{name} n={n} k={k} → 6"));
    }
    Ok(seen.join(", "))
}

fn projective_planes() -> Result<String, String> {
    let fano = projective_plane_incidence(2).map_err(|e| e.to_string())?;
    ensure!(
        is_isomorphic(&fano, &data::heawood()) == Ok(true),
        "q=2 is not Heawood"
    );
    for q in [3, 5] {
        let g = projective_plane_incidence(q).map_err(|e| e.to_string())?;
        ensure!(g.n() == 2 * (q * q + q + 1), "q={q}: {} vertices", g.n());
        ensure!(
            g.regular_degree() == Some(q + 1),
            "q={q}: not {}-regular",
            q + 1
        );
        ensure!(girth(&g) == Some(6), "q={q}: girth {:?}", girth(&g));
        let mut mark = vec![false; g.n()];
        for u in 0..g.n() {
            for w in g.neighbors(u) {
                mark[w] = true;
            }
            for v in u + 1..g.n() {
                let common = g.neighbors(v).filter(|&w| mark[w]).count();
                ensure!(common <= 1, "q={q}: {u} and {v} share {common} neighbours");
            }
            for w in g.neighbors(u) {
                mark[w] = false;
            }
        }
    }
    Ok("q=2 Heawood; q=3,5 regular, girth 6".into())
}

fn exhaustive_tables() -> Result<String, String> {
    let options = SearchOptions::default();
    let mut rows = Vec::new();
    for n in [6, 8, 10] {
        let values: Vec<usize> = (0..=4)
            .map(|k| exhaustive_gamma(n, k, &options).map(|r| r.gamma))
            .collect::<Result<_, _>>()
            .map_err(|e| e.to_string())?;
        ensure!(values[0] == n, "gamma_0({n}) = {}", values[0]);
        ensure!(values[1] == n / 2 + 1, "gamma_1({n}) = {}", values[1]);
        ensure!(
            values.windows(2).all(|w| w[1] <= w[0]),
            "n={n}: not monotone {values:?}"
        );
        rows.push(format!("n={n}: {values:?}"));
    }
    Ok(rows.join("; "))
}

fn solver_oracle() -> Result<String, String> {
    let mut instances = 0;
    for seed in 0..240u64 {
        let n = 4 + 2 * (seed as usize % 7);
        let dg = random_decomposed_regular(n, 3, seed).map_err(|e| e.to_string())?;
        let oracle = oracle_min_chord_cycle_all_k(&dg, 5).map_err(|e| e.to_string())?;
        for (k, o) in oracle.iter().enumerate() {
            let r = min_chord_cycle(&dg, k);
            r.check(&dg)
                .map_err(|e| format!("seed {seed} k={k}: {e}"))?;
            ensure!(
                r.length == o.length,
                "seed {seed} n={n} k={k}: solver {} oracle {}",
                r.length,
                o.length
            );
        }
        instances += 1;
    }
    Ok(format!("{instances} instances, k=0..5"))
}

fn upper_bound_property() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut worst = 0.0f64;
    for seed in 0..100u64 {
        let n = 2 * rng.gen_range(10..=100);
        let dg = random_decomposed_regular(n, 3, seed).map_err(|e| e.to_string())?;
        let length = min_chord_cycle(&dg, 2).length as f64;
        let bound = (2.0 * n as f64).sqrt() + 2.0;
        ensure!(
            length <= bound,
            "cubic seed {seed} n={n}: {length} > {bound:.2}"
        );
        worst = worst.max(length / bound);
    }
    let mut regular = 0;
    for d in [4, 5] {
        for seed in 0..25u64 {
            let n = 2 * rng.gen_range(d / 2 + 1..=60);
            let dg = random_decomposed_regular(n, d, 1000 * d as u64 + seed)
                .map_err(|e| e.to_string())?;
            let length = min_chord_cycle(&dg, 2).length as f64;
            let bound = d_regular_gamma2_upper(d, n).map_err(|e| e.to_string())? + 1.0;
            ensure!(
                length <= bound,
                "d={d} seed {seed} n={n}: {length} > {bound:.2}"
            );
            regular += 1;
        }
    }
    Ok(format!(
        "100 cubic and {regular} 4/5-regular instances, largest length/bound {worst:.2}"
    ))
}

fn partition_tightness() -> Result<String, String> {
    for k in [2, 4, 6, 8] {
        let w = max_partition_weight(k).map_err(|e| e.to_string())?;
        ensure!(w == k * k / 2, "k={k}: maximum {w}");
    }
    Ok("2, 8, 18, 32".into())
}

fn decomposition_and_rewiring() -> Result<String, String> {
    for (name, g) in [
        ("Petersen", data::petersen()),
        ("Heawood", data::heawood()),
        ("Tutte–Coxeter", data::tutte_coxeter()),
    ] {
        let dg = petersen_decompose(&g).map_err(|e| format!("{name}: {e}"))?;
        ensure!(dg.validate().is_empty(), "{name}: invalid decomposition");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0xdec0);
    for seed in 0..50u64 {
        let n = 2 * rng.gen_range(5..=40);
        // hide the Hamilton cycle behind a random relabelling
        let base = random_decomposed_regular(n, 3, seed).map_err(|e| e.to_string())?;
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut rng);
        let g = base.graph().relabeled(&perm).map_err(|e| e.to_string())?;
        let dg = petersen_decompose(&g).map_err(|e| format!("seed {seed}: {e}"))?;
        ensure!(
            dg.validate().is_empty(),
            "seed {seed}: invalid decomposition"
        );
        ensure!(
            dg.graph() == &g,
            "seed {seed}: decomposition of a different graph"
        );
    }
    for seed in 0..20u64 {
        let blocks = 2 + seed as usize % 4;
        let g = random_bridged_cubic(blocks, 6 + 2 * (seed as usize % 3), seed)
            .map_err(|e| e.to_string())?;
        let before = girth(&g);
        let fixed = eliminate_bridges(&g).map_err(|e| format!("seed {seed}: {e}"))?;
        ensure!(fixed.is_cubic(), "seed {seed}: output not cubic");
        ensure!(
            find_bridges(&fixed).is_empty(),
            "seed {seed}: bridges remain"
        );
        ensure!(
            girth(&fixed) >= before,
            "seed {seed}: girth {:?} < {:?}",
            girth(&fixed),
            before
        );
    }
    Ok("3 reference graphs, 50 random bridgeless, 20 bridged rewired".into())
}

fn moore_bounds() -> Result<String, String> {
    for (g, want) in [(5, 10), (6, 14), (8, 30)] {
        let got = moore_bound(3, g).map_err(|e| e.to_string())?;
        ensure!(got == want, "moore_bound(3,{g}) = {got}");
    }
    let tc = data::tutte_coxeter();
    ensure!(
        tc.n() == 30 && girth(&tc) == Some(8),
        "Tutte–Coxeter girth {:?}",
        girth(&tc)
    );
    Ok("10, 14, 30; Tutte–Coxeter girth 8".into())
}
