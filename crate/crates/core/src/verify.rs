//! Randomized property suite for the arrowing laws and bound identities.
//!
//! Each property draws its instances from an independent RNG stream derived
//! from the suite seed and the property name, so the whole report is
//! reproducible bit for bit and any failure can be replayed from the inputs
//! it records (graphs as graph6, parameters inline).
//!
//! The oracle hierarchy is fixed: the exhaustive coloring scan is ground
//! truth, and every faster path is checked against it, never the reverse.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use num_rational::Rational64;
use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::arrowing::{
    arrows_bipartite_cover, arrows_generic, arrows_matching, SearchLimits,
};
use crate::bounds::{disjoint_upper, matching_lower, ratio_envelope_graph};
use crate::constructions::{build_ut, embed_bundle_after_deletion, BundleParams, UtParams};
use crate::graph::Graph;
use crate::solver::{enumerate_hosts, exact_matching_size_ramsey, SolverCaps};

#[derive(Debug, Clone, Copy)]
pub struct SuiteConfig {
    pub seed: u64,
    /// vertex cap for sampled hosts
    pub max_n: usize,
    /// edge cap for sampled hosts
    pub max_m: usize,
    pub max_t: u64,
    /// random instances per property; fixed regression cases run whenever
    /// this is nonzero
    pub instances: usize,
}

impl Default for SuiteConfig {
    fn default() -> SuiteConfig {
        SuiteConfig {
            seed: 0x00c0_ffee,
            max_n: 10,
            max_m: 12,
            max_t: 3,
            instances: 40,
        }
    }
}

/// One failed instance, replayable from the recorded inputs alone.
#[derive(Debug, Clone)]
pub struct Failure {
    /// `key=value` pairs; graphs appear as graph6 strings
    pub inputs: String,
    pub detail: String,
}

#[derive(Debug, Clone)]
pub struct PropertyReport {
    pub name: &'static str,
    pub instances: usize,
    pub failures: Vec<Failure>,
    pub runtime: Duration,
}

impl PropertyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub seed: u64,
    pub properties: Vec<PropertyReport>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.properties.iter().all(|p| p.passed())
    }

    /// Human-readable summary. Runtime is deliberately left out so a fixed
    /// seed renders byte-identically across machines.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "property suite (seed {:#x})", self.seed).unwrap();
        for p in &self.properties {
            let status = if p.passed() { "PASS" } else { "FAIL" };
            writeln!(out, "{status} {} ({} instances)", p.name, p.instances).unwrap();
            for f in &p.failures {
                writeln!(out, "  failure: {}", f.detail).unwrap();
                writeln!(out, "    replay: {}", f.inputs).unwrap();
            }
        }
        out
    }
}

/// Per-property RNG stream: suite seed mixed with an FNV-1a hash of the
/// property name, so adding a property never shifts another's stream.
fn stream(seed: u64, label: &str) -> ChaCha8Rng {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in label.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    ChaCha8Rng::seed_from_u64(seed ^ h)
}

struct Recorder {
    name: &'static str,
    instances: usize,
    failures: Vec<Failure>,
    started: Instant,
}

impl Recorder {
    fn new(name: &'static str) -> Recorder {
        Recorder {
            name,
            instances: 0,
            failures: Vec::new(),
            started: Instant::now(),
        }
    }

    fn case(&mut self, ok: bool, inputs: String, detail: &str) {
        self.instances += 1;
        if !ok {
            self.failures.push(Failure {
                inputs,
                detail: detail.to_string(),
            });
        }
    }

    fn finish(self) -> PropertyReport {
        PropertyReport {
            name: self.name,
            instances: self.instances,
            failures: self.failures,
            runtime: self.started.elapsed(),
        }
    }
}

fn random_graph(rng: &mut ChaCha8Rng, max_n: usize, max_m: usize) -> Graph {
    let n = rng.random_range(2..=max_n.max(2));
    let mut pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    pairs.shuffle(rng);
    let m = rng.random_range(1..=max_m.min(pairs.len()).max(1));
    pairs.truncate(m);
    Graph::from_edges(n, &pairs).expect("sampled within caps")
}

fn random_bipartite(rng: &mut ChaCha8Rng, max_n: usize, max_m: usize) -> Graph {
    let n = rng.random_range(2..=max_n.max(2));
    let a = rng.random_range(1..n);
    let mut pairs: Vec<(usize, usize)> = (0..a)
        .flat_map(|u| (a..n).map(move |v| (u, v)))
        .collect();
    pairs.shuffle(rng);
    let m = rng.random_range(1..=max_m.min(pairs.len()).max(1));
    pairs.truncate(m);
    Graph::from_edges(n, &pairs).expect("sampled within caps")
}

/// Small isolate-free targets, one per isomorphism class, up to 4 edges.
fn target_pool() -> Vec<Graph> {
    (1..=4)
        .flat_map(|m| enumerate_hosts(m, 2 * m).expect("tiny"))
        .collect()
}

/// Host that is biased toward arrowing: half the time t disjoint copies of
/// the target plus noise edges, otherwise fully random. Laws of the shape
/// "arrows implies ..." need positive cases to bite.
fn sample_host_for(rng: &mut ChaCha8Rng, t: u64, g: &Graph, max_n: usize, max_m: usize) -> Graph {
    if rng.random_bool(0.5) {
        let copies = crate::bounds::disjoint_copies(g, t).expect("tiny");
        if copies.vertex_count() + 4 <= crate::MAX_VERTICES {
            return copies;
        }
    }
    random_graph(rng, max_n, max_m)
}

fn g6(g: &Graph) -> String {
    g.to_graph6()
}

const VERIFY_LIMITS: SearchLimits = SearchLimits {
    max_edges: 32,
    node_budget: 1_000_000_000,
};

fn solver_caps() -> SolverCaps {
    SolverCaps::default()
}

/// arrows(F, t, H) implies arrows(F + sK1, t, H + sK1), and padded targets
/// solve to the same value as their cores.
pub fn check_padding(cfg: &SuiteConfig) -> PropertyReport {
    let mut rec = Recorder::new("padding");
    if cfg.instances == 0 {
        return rec.finish();
    }
    let mut rng = stream(cfg.seed, "padding");
    let pool = target_pool();
    let caps = solver_caps();

    // pinned value-level case: one padded edge keeps value 2 at t=2
    let k2 = Graph::complete(2).unwrap();
    let padded = k2.pad_with_isolates(3).unwrap();
    let v = exact_matching_size_ramsey(2, &padded, &caps).unwrap().exact();
    rec.case(
        v == Some(2),
        format!("t=2 target={} s=3", g6(&padded)),
        "padded edge target must keep value 2",
    );

    for _ in 0..cfg.instances {
        let h = pool[rng.random_range(0..pool.len())].clone();
        let t = rng.random_range(1..=cfg.max_t.min(2));
        let s = rng.random_range(0..=3usize);
        let f = sample_host_for(&mut rng, t, &h, cfg.max_n, cfg.max_m);
        let before = arrows_matching(&f, t as usize, &h, VERIFY_LIMITS)
            .unwrap()
            .arrows();
        if before != Some(true) {
            rec.case(true, String::new(), "");
            continue;
        }
        if f.vertex_count() + s > crate::MAX_VERTICES {
            rec.case(true, String::new(), "");
            continue;
        }
        let fp = f.pad_with_isolates(s).unwrap();
        let hp = h.pad_with_isolates(s).unwrap();
        let after = arrows_matching(&fp, t as usize, &hp, VERIFY_LIMITS)
            .unwrap()
            .arrows();
        rec.case(
            after == Some(true),
            format!("host={} t={t} target={} s={s}", g6(&f), g6(&h)),
            "arrowing must survive padding host and target alike",
        );

        // value level on the small targets
        if h.edge_count() <= 3 && t <= 2 {
            let base = exact_matching_size_ramsey(t, &h, &caps).unwrap().exact();
            let pad = exact_matching_size_ramsey(t, &h.pad_with_isolates(s).unwrap(), &caps)
                .unwrap()
                .exact();
            rec.case(
                base == pad,
                format!("t={t} target={} s={s}", g6(&h)),
                "padded target must solve to the core value",
            );
        }
    }
    rec.finish()
}

/// arrows(F, s, G) with s >= 2 implies arrows(F - v, s - 1, G) for every
/// single vertex v.
pub fn check_vertex_deletion(cfg: &SuiteConfig) -> PropertyReport {
    let mut rec = Recorder::new("vertex-deletion");
    if cfg.instances == 0 {
        return rec.finish();
    }
    let mut rng = stream(cfg.seed, "vertex-deletion");
    let pool = target_pool();

    // pinned case: two disjoint stars survive any single deletion at t=2
    let star = Graph::star(3).unwrap();
    let f0 = star.disjoint_union(&star).unwrap();
    for v in 0..f0.vertex_count() {
        let (fm, _) = f0.delete_vertices(1 << v);
        let ok = arrows_matching(&fm, 1, &star, VERIFY_LIMITS).unwrap().arrows() == Some(true);
        rec.case(
            ok,
            format!("host={} deleted={v} t=1 target={}", g6(&f0), g6(&star)),
            "deleting one vertex must leave an arrowing host one level down",
        );
    }

    for _ in 0..cfg.instances {
        let g = pool[rng.random_range(0..pool.len())].clone();
        let s = rng.random_range(2..=cfg.max_t.max(2));
        let f = sample_host_for(&mut rng, s, &g, cfg.max_n, cfg.max_m);
        if arrows_matching(&f, s as usize, &g, VERIFY_LIMITS).unwrap().arrows() != Some(true) {
            rec.case(true, String::new(), "");
            continue;
        }
        let mut all_ok = true;
        let mut bad = 0;
        for v in 0..f.vertex_count() {
            let (fm, _) = f.delete_vertices(1 << v);
            if arrows_matching(&fm, (s - 1) as usize, &g, VERIFY_LIMITS)
                .unwrap()
                .arrows()
                != Some(true)
            {
                all_ok = false;
                bad = v;
                break;
            }
        }
        rec.case(
            all_ok,
            format!("host={} deleted={bad} t={s} target={}", g6(&f), g6(&g)),
            "deleting one vertex must leave an arrowing host one level down",
        );
    }
    rec.finish()
}

/// Disjoint unions of arrowing hosts arrow the summed matching, and solved
/// values obey exact(s+t) <= exact(s) + exact(t).
pub fn check_subadditivity(cfg: &SuiteConfig) -> PropertyReport {
    let mut rec = Recorder::new("subadditivity");
    if cfg.instances == 0 {
        return rec.finish();
    }
    let mut rng = stream(cfg.seed, "subadditivity");
    let pool = target_pool();
    let caps = solver_caps();

    // pinned value-level cases
    let star = Graph::star(3).unwrap();
    let a = exact_matching_size_ramsey(1, &star, &caps).unwrap().exact().unwrap();
    let b = exact_matching_size_ramsey(2, &star, &caps).unwrap().exact().unwrap();
    rec.case(
        b <= 2 * a,
        format!("t=1+1 target={}", g6(&star)),
        "doubled star value must stay under twice the single value",
    );
    let k2 = Graph::complete(2).unwrap();
    let v3 = exact_matching_size_ramsey(3, &k2, &caps).unwrap().exact().unwrap();
    let v1 = exact_matching_size_ramsey(1, &k2, &caps).unwrap().exact().unwrap();
    let v2 = exact_matching_size_ramsey(2, &k2, &caps).unwrap().exact().unwrap();
    rec.case(
        v3 <= v1 + v2,
        "t=1+2 target=A_".to_string(),
        "edge value at t=3 must stay under the split sum",
    );

    for _ in 0..cfg.instances {
        let g = pool[rng.random_range(0..pool.len())].clone();
        let s = rng.random_range(1..=cfg.max_t.max(1));
        let t = rng.random_range(1..=cfg.max_t.max(1));
        let f1 = sample_host_for(&mut rng, s, &g, cfg.max_n, cfg.max_m);
        let f2 = sample_host_for(&mut rng, t, &g, cfg.max_n, cfg.max_m);
        let a1 = arrows_matching(&f1, s as usize, &g, VERIFY_LIMITS).unwrap().arrows();
        let a2 = arrows_matching(&f2, t as usize, &g, VERIFY_LIMITS).unwrap().arrows();
        if a1 != Some(true) || a2 != Some(true) {
            rec.case(true, String::new(), "");
            continue;
        }
        if f1.vertex_count() + f2.vertex_count() > crate::MAX_VERTICES {
            rec.case(true, String::new(), "");
            continue;
        }
        let u = f1.disjoint_union(&f2).unwrap();
        let both = arrows_matching(&u, (s + t) as usize, &g, VERIFY_LIMITS)
            .unwrap()
            .arrows();
        rec.case(
            both == Some(true),
            format!("host1={} host2={} s={s} t={t} target={}", g6(&f1), g6(&f2), g6(&g)),
            "union of arrowing hosts must arrow the summed matching",
        );

        // value level kept to t-levels the solver settles in milliseconds
        if g.edge_count() <= 3 && s + t <= 2 {
            let vs = exact_matching_size_ramsey(s, &g, &caps).unwrap().exact().unwrap();
            let vt = exact_matching_size_ramsey(t, &g, &caps).unwrap().exact().unwrap();
            let vst = exact_matching_size_ramsey(s + t, &g, &caps).unwrap().exact().unwrap();
            rec.case(
                vst <= vs + vt,
                format!("s={s} t={t} target={}", g6(&g)),
                "solved values must be subadditive in t",
            );
        }
    }
    rec.finish()
}

/// Adding isolated vertices to the target never moves the solved value.
pub fn check_core_invariance(cfg: &SuiteConfig) -> PropertyReport {
    let mut rec = Recorder::new("core-invariance");
    if cfg.instances == 0 {
        return rec.finish();
    }
    let mut rng = stream(cfg.seed, "core-invariance");
    let pool = target_pool();
    let caps = solver_caps();

    // pinned: an edge plus two isolates at t=2, and a padded path
    let k2iso = Graph::complete(2).unwrap().pad_with_isolates(2).unwrap();
    let v = exact_matching_size_ramsey(2, &k2iso, &caps).unwrap().exact();
    rec.case(
        v == Some(2),
        format!("t=2 target={}", g6(&k2iso)),
        "edge plus isolates must solve to 2",
    );
    let p3iso = Graph::path(3).unwrap().pad_with_isolates(1).unwrap();
    let v = exact_matching_size_ramsey(2, &p3iso, &caps).unwrap().exact();
    rec.case(
        v == Some(4),
        format!("t=2 target={}", g6(&p3iso)),
        "padded path must solve to 4",
    );

    for _ in 0..cfg.instances {
        let g = pool[rng.random_range(0..pool.len())].clone();
        if g.edge_count() > 3 {
            rec.case(true, String::new(), "");
            continue;
        }
        let t = rng.random_range(1..=cfg.max_t.min(2));
        let s = rng.random_range(1..=3usize);
        let padded = g.pad_with_isolates(s).unwrap();
        let (core, removed) = padded.isolate_free_core();
        let same_class = core.canonical_code() == g.canonical_form().canonical_code();
        let va = exact_matching_size_ramsey(t, &g, &caps).unwrap().exact();
        let vb = exact_matching_size_ramsey(t, &padded, &caps).unwrap().exact();
        rec.case(
            same_class && removed == s && va == vb && va.is_some(),
            format!("t={t} target={} s={s}", g6(&g)),
            "value must only depend on the isolate-free core",
        );
    }
    rec.finish()
}

/// The three deciders agree wherever all are applicable: bipartite cover
/// versus branch-and-prune versus the exhaustive coloring scan.
pub fn check_oracle_agreement(cfg: &SuiteConfig) -> PropertyReport {
    let mut rec = Recorder::new("oracle-agreement");
    if cfg.instances == 0 {
        return rec.finish();
    }
    let mut rng = stream(cfg.seed, "oracle-agreement");
    let pool: Vec<Graph> = target_pool()
        .into_iter()
        .filter(|g| g.edge_count() <= 6)
        .collect();

    for _ in 0..cfg.instances {
        let f = random_bipartite(&mut rng, cfg.max_n, cfg.max_m.min(14));
        let g = pool[rng.random_range(0..pool.len())].clone();
        let t = rng.random_range(1..=cfg.max_t) as usize;
        let tk2 = match Graph::matching(t) {
            Ok(m) => m,
            Err(_) => {
                rec.case(true, String::new(), "");
                continue;
            }
        };
        let inputs = format!("host={} t={t} target={}", g6(&f), g6(&g));
        let cover = arrows_bipartite_cover(&f, t, &g).unwrap().arrows();
        let branch = arrows_matching(&f, t, &g, VERIFY_LIMITS).unwrap().arrows();
        let generic = if f.edge_count() <= 14 {
            arrows_generic(&f, &tk2, &g, SearchLimits {
                max_edges: 14,
                node_budget: VERIFY_LIMITS.node_budget,
            })
            .unwrap()
            .arrows()
        } else {
            branch
        };
        rec.case(
            cover == branch && branch == generic && cover.is_some(),
            inputs,
            "cover, branch and exhaustive scans must agree on bipartite hosts",
        );
    }
    rec.finish()
}

/// Adding a host edge never destroys arrowing.
pub fn check_edge_monotonicity(cfg: &SuiteConfig) -> PropertyReport {
    let mut rec = Recorder::new("edge-monotonicity");
    if cfg.instances == 0 {
        return rec.finish();
    }
    let mut rng = stream(cfg.seed, "edge-monotonicity");
    let pool = target_pool();

    for _ in 0..cfg.instances {
        let g = pool[rng.random_range(0..pool.len())].clone();
        let t = rng.random_range(1..=cfg.max_t);
        let f = sample_host_for(&mut rng, t, &g, cfg.max_n, cfg.max_m);
        if arrows_matching(&f, t as usize, &g, VERIFY_LIMITS).unwrap().arrows() != Some(true) {
            rec.case(true, String::new(), "");
            continue;
        }
        let n = f.vertex_count();
        let missing: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
            .filter(|&(u, v)| !f.has_edge(u, v))
            .collect();
        if missing.is_empty() {
            rec.case(true, String::new(), "");
            continue;
        }
        let (u, v) = missing[rng.random_range(0..missing.len())];
        let mut edges: Vec<(usize, usize)> = f.edges().iter().map(|e| (e.u, e.v)).collect();
        edges.push((u, v));
        let bigger = Graph::from_edges(n, &edges).unwrap();
        let still = arrows_matching(&bigger, t as usize, &g, VERIFY_LIMITS)
            .unwrap()
            .arrows();
        rec.case(
            still == Some(true),
            format!("host={} added={u}-{v} t={t} target={}", g6(&f), g6(&g)),
            "a supergraph on the same vertices must still arrow",
        );
    }
    rec.finish()
}

/// Deleting up to t-1 vertices from the t-level host still leaves room for
/// the bundle: enough stars survive, sizewise, to re-embed it.
pub fn check_star_domination(cfg: &SuiteConfig) -> PropertyReport {
    let mut rec = Recorder::new("star-domination");
    if cfg.instances == 0 {
        return rec.finish();
    }
    let mut rng = stream(cfg.seed, "star-domination");

    for _ in 0..cfg.instances {
        let k = rng.random_range(2..=3usize);
        let mut ell: Vec<u64> = (0..k).map(|_| rng.random_range(0..=3u64)).collect();
        ell.sort_unstable_by(|a, b| b.cmp(a));
        let t = rng.random_range(1..=cfg.max_t.min(3));
        let params = BundleParams::new(ell.clone()).unwrap();
        let q = UtParams::new(params, t).unwrap();
        if q.vertex_count() > crate::MAX_VERTICES as u64 {
            rec.case(true, String::new(), "");
            continue;
        }
        let host = build_ut(&q).unwrap();
        let n = host.vertex_count();
        // random deletion set of at most t-1 vertices
        let mut verts: Vec<usize> = (0..n).collect();
        verts.shuffle(&mut rng);
        let del = rng.random_range(0..=(t - 1) as usize);
        let mask: u64 = verts[..del].iter().fold(0u64, |m, &v| m | 1 << v);
        let inputs = format!("ell={ell:?} t={t} deleted={mask:#x}");
        let ok = embed_bundle_after_deletion(&q, mask).is_ok();
        rec.case(
            ok,
            inputs,
            "bundle must re-embed after any deletion of fewer than t vertices",
        );
    }
    rec.finish()
}

/// Closed-form bound envelopes bracket solved values, ratios live in
/// [1/m, 1], and solved values decay no slower than t copies of the base.
pub fn check_ratio_envelope(cfg: &SuiteConfig) -> PropertyReport {
    let mut rec = Recorder::new("ratio-envelope");
    if cfg.instances == 0 {
        return rec.finish();
    }
    let mut rng = stream(cfg.seed, "ratio-envelope");
    let pool: Vec<Graph> = target_pool()
        .into_iter()
        .filter(|g| g.edge_count() <= 3)
        .collect();
    let caps = solver_caps();

    for _ in 0..cfg.instances {
        let g = pool[rng.random_range(0..pool.len())].clone();
        let m = g.edge_count() as u64;
        let t_max = cfg.max_t.min(2);
        let mut exact: Vec<(u64, u64)> = Vec::new();
        let mut ok = true;
        let mut why = "";
        for t in 1..=t_max {
            let v = exact_matching_size_ramsey(t, &g, &caps).unwrap().exact().unwrap();
            exact.push((t, v));
            if v < matching_lower(&g, t).unwrap() || v > disjoint_upper(&g, t).unwrap() {
                ok = false;
                why = "solved value escaped the closed-form bracket";
            }
        }
        // subadditivity consequence: exact(t) <= t * exact(1)
        let base = exact[0].1;
        if exact.iter().any(|&(t, v)| v > t * base) {
            ok = false;
            why = "solved value exceeded t copies of the base value";
        }
        let seq = ratio_envelope_graph(&g, t_max, &exact).unwrap();
        for term in &seq.terms {
            let lo = term.lower_ratio;
            let hi = term.upper_ratio;
            if lo > hi || lo < Rational64::new(1, m as i64) || hi > Rational64::new(1, 1) {
                ok = false;
                why = "ratio term escaped [1/m, 1]";
            }
        }
        if seq.terms.iter().any(|term| term.upper_ratio < seq.inf_upper) {
            ok = false;
            why = "running infimum above a term";
        }
        rec.case(ok, format!("target={} t_max={t_max}", g6(&g)), why);
    }
    rec.finish()
}

type Check = fn(&SuiteConfig) -> PropertyReport;

const CHECKS: &[(&str, Check)] = &[
    ("padding", check_padding),
    ("vertex-deletion", check_vertex_deletion),
    ("subadditivity", check_subadditivity),
    ("core-invariance", check_core_invariance),
    ("oracle-agreement", check_oracle_agreement),
    ("edge-monotonicity", check_edge_monotonicity),
    ("star-domination", check_star_domination),
    ("ratio-envelope", check_ratio_envelope),
];

/// Runs every property concurrently and aggregates in declaration order.
pub fn run_suite(cfg: &SuiteConfig) -> SuiteReport {
    let properties: Vec<PropertyReport> = CHECKS
        .par_iter()
        .map(|(_, check)| check(cfg))
        .collect();
    SuiteReport {
        seed: cfg.seed,
        properties,
    }
}
