//! Closed-form bounds for r(tK2, G), the ratio envelope for the limit
//! r_inf(G) = lim r(tK2,G) / (t |E(G)|), and the parameter families that
//! realize every limit value in [0, 1].
//!
//! All bound arithmetic is exact: integers for values, `Rational64` for
//! ratios. Floating point appears only in the two asymptotic envelope
//! formulas, which exist for plotting against user-supplied constants.

use num_rational::Rational64;

use crate::constructions::{BundleParams, UtParams};
use crate::graph::Graph;
use crate::matching::matching_number;
use crate::{Error, Result};

/// Where a bound value comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundSource {
    /// t = 1: any host needs |E(G)| edges and G itself suffices.
    EdgeCountBase,
    /// (t-1) * maxdeg(G) + |E(G)|, from damaging t-1 highest-degree spots.
    DegreeLower,
    /// t disjoint copies of G arrow.
    DisjointUnion,
    /// The bundled host U_t arrows.
    BundleHost,
    /// Substituted exact value from the solver.
    ExactSolver,
}

impl BoundSource {
    pub fn tag(self) -> &'static str {
        match self {
            BoundSource::EdgeCountBase => "edge-count-base",
            BoundSource::DegreeLower => "degree-lower",
            BoundSource::DisjointUnion => "disjoint-union",
            BoundSource::BundleHost => "bundle-host",
            BoundSource::ExactSolver => "exact-solver",
        }
    }
}

/// Two-sided bound on r(tK2, target) for one t.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundReport {
    pub t: u64,
    pub lower: u64,
    pub upper: u64,
    pub lower_src: BoundSource,
    pub upper_src: BoundSource,
}

/// r(K2, G) = |E(G)|: with fewer edges everything blue refutes, and G
/// itself forces a red edge or an all-blue copy.
pub fn base_value(g: &Graph) -> Result<u64> {
    if !g.is_nonempty() {
        return Err(Error::EmptyGraph);
    }
    Ok(g.edge_count() as u64)
}

fn check_t(t: u64) -> Result<()> {
    if t < 1 {
        return Err(Error::InvalidParams("t must be at least 1".into()));
    }
    Ok(())
}

/// max(t, (t-1) maxdeg(G) + |E(G)|); the max never binds for nonempty G.
pub fn matching_lower(g: &Graph, t: u64) -> Result<u64> {
    check_t(t)?;
    if !g.is_nonempty() {
        return Err(Error::EmptyGraph);
    }
    let m = g.edge_count() as u64;
    let delta = g.max_degree() as u64;
    Ok(t.max((t - 1) * delta + m))
}

/// t |E(G)|, achieved by t vertex-disjoint copies of G.
pub fn disjoint_upper(g: &Graph, t: u64) -> Result<u64> {
    check_t(t)?;
    if !g.is_nonempty() {
        return Err(Error::EmptyGraph);
    }
    Ok(t * g.edge_count() as u64)
}

/// The witness host behind [`disjoint_upper`]: t disjoint copies of G.
pub fn disjoint_copies(g: &Graph, t: u64) -> Result<Graph> {
    check_t(t)?;
    let mut host = g.clone();
    for _ in 1..t {
        host = host.disjoint_union(g)?;
    }
    Ok(host)
}

/// Both closed forms for a bundle: lower (t-1)(k+l1) + n + k(k-2), upper
/// |E(U_t)| = n + (t-1) l1 + (k+t-1)^2 - 2k. They collapse at t = 1.
pub fn bundle_two_sided(p: &BundleParams, t: u64) -> Result<BoundReport> {
    check_t(t)?;
    let st = p.stats();
    let lower = (t - 1) * st.max_degree + st.edge_count;
    let upper = UtParams::new(p.clone(), t)?.edge_count();
    debug_assert!(lower <= upper);
    Ok(BoundReport {
        t,
        lower,
        upper,
        lower_src: if t == 1 { BoundSource::EdgeCountBase } else { BoundSource::DegreeLower },
        upper_src: BoundSource::BundleHost,
    })
}

/// Per-t two-sided bounds for an arbitrary nonempty graph.
pub fn generic_reports(g: &Graph, t_max: u64) -> Result<Vec<BoundReport>> {
    check_t(t_max)?;
    (1..=t_max)
        .map(|t| {
            Ok(BoundReport {
                t,
                lower: matching_lower(g, t)?,
                upper: disjoint_upper(g, t)?,
                lower_src: if t == 1 { BoundSource::EdgeCountBase } else { BoundSource::DegreeLower },
                upper_src: BoundSource::DisjointUnion,
            })
        })
        .collect()
}

/// Per-t bounds for a bundle with the sharper of the two upper bounds.
///
/// The bundled host beats t disjoint copies for mid-range t but loses for
/// small t (or tiny bundles), so each report takes the minimum; ties go to
/// the disjoint union, whose witness is simpler.
pub fn bundle_reports(p: &BundleParams, t_max: u64) -> Result<Vec<BoundReport>> {
    check_t(t_max)?;
    let st = p.stats();
    (1..=t_max)
        .map(|t| {
            let two_sided = bundle_two_sided(p, t)?;
            let disjoint = t * st.edge_count;
            let (upper, upper_src) = if disjoint <= two_sided.upper {
                (disjoint, BoundSource::DisjointUnion)
            } else {
                (two_sided.upper, BoundSource::BundleHost)
            };
            Ok(BoundReport {
                upper,
                upper_src,
                ..two_sided
            })
        })
        .collect()
}

/// One row of a ratio envelope: the bounds at t and both ratios over t*m.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RatioTerm {
    pub report: BoundReport,
    pub lower_ratio: Rational64,
    pub upper_ratio: Rational64,
}

/// The bracket the finite t-sweep puts around the limit value.
///
/// `max_lower` is maxdeg/m, which bounds every term from below; `inf_upper`
/// is the best upper ratio seen, nonincreasing as the sweep lengthens.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatioSequence {
    pub edge_count: u64,
    pub max_degree: u64,
    pub terms: Vec<RatioTerm>,
    pub max_lower: Rational64,
    pub inf_upper: Rational64,
}

fn ratio(num: u64, den: u64) -> Rational64 {
    let num = i64::try_from(num).expect("bound values stay far below i64::MAX");
    let den = i64::try_from(den).expect("bound values stay far below i64::MAX");
    Rational64::new(num, den)
}

fn sequence_from_reports(
    reports: Vec<BoundReport>,
    edge_count: u64,
    max_degree: u64,
) -> RatioSequence {
    let terms: Vec<RatioTerm> = reports
        .into_iter()
        .map(|report| RatioTerm {
            report,
            lower_ratio: ratio(report.lower, report.t * edge_count),
            upper_ratio: ratio(report.upper, report.t * edge_count),
        })
        .collect();
    let inf_upper = terms
        .iter()
        .map(|term| term.upper_ratio)
        .min()
        .expect("t_max >= 1 yields at least one term");
    RatioSequence {
        edge_count,
        max_degree,
        terms,
        max_lower: ratio(max_degree, edge_count),
        inf_upper,
    }
}

/// Envelope for an arbitrary graph. Exact solver values may be substituted
/// per t as `(t, value)` pairs; those terms report the exact ratio on both
/// sides.
pub fn ratio_envelope_graph(
    g: &Graph,
    t_max: u64,
    exact_values: &[(u64, u64)],
) -> Result<RatioSequence> {
    let mut reports = generic_reports(g, t_max)?;
    for &(t, value) in exact_values {
        if t >= 1 && t <= t_max {
            reports[(t - 1) as usize] = BoundReport {
                t,
                lower: value,
                upper: value,
                lower_src: BoundSource::ExactSolver,
                upper_src: BoundSource::ExactSolver,
            };
        }
    }
    Ok(sequence_from_reports(
        reports,
        g.edge_count() as u64,
        g.max_degree() as u64,
    ))
}

/// Envelope for a bundle from closed forms alone; usable far beyond the
/// 64-vertex construction cap.
pub fn ratio_envelope_bundle(p: &BundleParams, t_max: u64) -> Result<RatioSequence> {
    let st = p.stats();
    Ok(sequence_from_reports(
        bundle_reports(p, t_max)?,
        st.edge_count,
        st.max_degree,
    ))
}

/// r_inf(G) <= r(G,G) / (nu(G) |E(G)|): a host for (G,G) also works for
/// (nu(G) K2, G), and the limit is an infimum over achieved ratios.
pub fn self_ramsey_upper(g: &Graph, rgg_upper: u64) -> Result<Rational64> {
    if !g.is_nonempty() {
        return Err(Error::EmptyGraph);
    }
    let nu = matching_number(g) as u64;
    Ok(ratio(rgg_upper, nu * g.edge_count() as u64))
}

/// Which construction a family specification used.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyCase {
    /// alpha > 0: fixed k with k*alpha >= 1, leading star of size
    /// floor(alpha * s), remainder spread greedily.
    PositiveAlpha { k: u64 },
    /// alpha = 0: k = floor(sqrt(N)) stars of near-equal sizes, from the
    /// division s = a*q + r.
    ZeroAlpha { q: u64, a: u64, r: u64 },
}

/// A bundle whose limit value converges to a requested alpha as N grows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySpec {
    pub alpha: Rational64,
    pub n: u64,
    /// total pendant mass s = N - 2k
    pub s: u64,
    pub case: FamilyCase,
    pub params: BundleParams,
}

/// Builds the N-th member of the family realizing limit value `alpha`.
///
/// For alpha > 0: k = max(2, ceil(1/alpha)), l1 = floor(alpha * (N - 2k)),
/// and the remaining pendant mass is spread greedily below l1. Feasible
/// exactly when k * l1 >= N - 2k (in particular whenever
/// N >= 2k + k^2/(k*alpha - 1) if k*alpha > 1; for k*alpha = 1 it requires
/// k | N - 2k). For alpha = 0: q = floor(sqrt(N)) stars split the mass as
/// evenly as possible; feasible for N >= 4.
pub fn family_for_alpha(alpha: Rational64, n: u64) -> Result<FamilySpec> {
    if alpha < Rational64::from_integer(0) || alpha > Rational64::from_integer(1) {
        return Err(Error::InvalidParams(format!("alpha = {alpha} is outside [0, 1]")));
    }
    let infeasible = |reason: String| Error::InfeasibleFamily {
        alpha: alpha.to_string(),
        n,
        reason,
    };

    if alpha == Rational64::from_integer(0) {
        let q = n.isqrt();
        if q < 2 {
            return Err(infeasible("need N >= 4 so that floor(sqrt(N)) >= 2".into()));
        }
        let s = n - 2 * q;
        let (a, r) = (s / q, s % q);
        let mut ell = vec![a + 1; r as usize];
        ell.extend(std::iter::repeat_n(a, (q - r) as usize));
        let params = BundleParams::new(ell)?;
        return Ok(FamilySpec {
            alpha,
            n,
            s,
            case: FamilyCase::ZeroAlpha { q, a, r },
            params,
        });
    }

    // ceil(1/alpha) for alpha = p/q is ceil(q/p)
    let (p, q) = (*alpha.numer() as u64, *alpha.denom() as u64);
    let k = 2u64.max(q.div_ceil(p));
    if n < 2 * k + 1 {
        return Err(infeasible(format!("need N > 2k = {}", 2 * k)));
    }
    let s = n - 2 * k;
    let ell1 = (alpha * Rational64::from_integer(s as i64)).floor().to_integer() as u64;
    if k * ell1 < s {
        return Err(infeasible(format!(
            "k * floor(alpha*s) = {} cannot cover s = {s}; increase N",
            k * ell1
        )));
    }
    let mut ell = vec![ell1];
    let mut remaining = s - ell1;
    for _ in 1..k {
        let take = ell1.min(remaining);
        ell.push(take);
        remaining -= take;
    }
    debug_assert_eq!(remaining, 0);
    let params = BundleParams::new(ell)?;
    Ok(FamilySpec {
        alpha,
        n,
        s,
        case: FamilyCase::PositiveAlpha { k },
        params,
    })
}

/// Inputs to the decay envelope for slowly growing cores.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AsymptoticParams {
    /// degree-growth exponent, strictly above 1
    pub c: f64,
    /// order of the isolate-free core
    pub core_order: u64,
    /// user-supplied leading constant
    pub k_c: f64,
}

impl AsymptoticParams {
    pub fn new(c: f64, core_order: u64, k_c: f64) -> Result<AsymptoticParams> {
        if !(c > 1.0) {
            return Err(Error::InvalidParams(format!("c = {c} must exceed 1")));
        }
        if !(k_c > 0.0) {
            return Err(Error::InvalidParams(format!("K = {k_c} must be positive")));
        }
        if core_order < 1 {
            return Err(Error::InvalidParams("core order must be at least 1".into()));
        }
        Ok(AsymptoticParams { c, core_order, k_c })
    }
}

/// K * (ln M / M)^(1/(c-1)): the decay envelope for the limit value when
/// core orders grow like M. Natural logarithm; exponent 1/(c-1).
pub fn core_growth_envelope(a: &AsymptoticParams) -> Result<f64> {
    if a.core_order < 2 {
        return Err(Error::InvalidParams(
            "core order must be at least 2 so the envelope is positive".into(),
        ));
    }
    let m = a.core_order as f64;
    Ok(a.k_c * (m.ln() / m).powf(1.0 / (a.c - 1.0)))
}

/// C * n^(2 - 1/d) * (ln n)^(1/d): the general host-size bound for
/// max-degree-d targets, with a user-supplied constant C.
pub fn bounded_degree_upper(max_degree: u64, n: u64, c: f64) -> Result<f64> {
    if max_degree < 2 {
        return Err(Error::InvalidParams("max degree must be at least 2".into()));
    }
    if n < 2 {
        return Err(Error::InvalidParams("order must be at least 2".into()));
    }
    if !(c > 0.0) {
        return Err(Error::InvalidParams(format!("C = {c} must be positive")));
    }
    let d = max_degree as f64;
    let nf = n as f64;
    Ok(c * nf.powf(2.0 - 1.0 / d) * nf.ln().powf(1.0 / d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::build_bundle;

    fn bp(ell: &[u64]) -> BundleParams {
        BundleParams::new(ell.to_vec()).unwrap()
    }

    fn rat(n: i64, d: i64) -> Rational64 {
        Rational64::new(n, d)
    }

    #[test]
    fn base_values() {
        assert_eq!(base_value(&Graph::cycle(5).unwrap()).unwrap(), 5);
        assert_eq!(base_value(&Graph::complete(2).unwrap()).unwrap(), 1);
        let b21 = build_bundle(&bp(&[2, 1])).unwrap();
        assert_eq!(base_value(&b21).unwrap(), 7);
        assert!(matches!(base_value(&Graph::empty(3).unwrap()), Err(Error::EmptyGraph)));
    }

    #[test]
    fn lower_bound_examples() {
        assert_eq!(matching_lower(&Graph::star(3).unwrap(), 2).unwrap(), 6);
        assert_eq!(matching_lower(&Graph::complete(2).unwrap(), 5).unwrap(), 5);
        let b11 = build_bundle(&bp(&[1, 1])).unwrap();
        assert_eq!(matching_lower(&b11, 2).unwrap(), 9);
        assert!(matching_lower(&Graph::star(3).unwrap(), 0).is_err());
    }

    #[test]
    fn upper_bound_examples() {
        assert_eq!(disjoint_upper(&Graph::star(3).unwrap(), 2).unwrap(), 6);
        for t in 1..=5 {
            assert_eq!(disjoint_upper(&Graph::complete(2).unwrap(), t).unwrap(), t);
        }
        assert_eq!(disjoint_upper(&Graph::cycle(5).unwrap(), 3).unwrap(), 15);
    }

    #[test]
    fn disjoint_witness_shape() {
        let g = Graph::star(3).unwrap();
        let host = disjoint_copies(&g, 3).unwrap();
        assert_eq!(host.vertex_count(), 12);
        assert_eq!(host.edge_count(), 9);
        assert_eq!(host.components().len(), 3);
    }

    #[test]
    fn bundle_two_sided_examples() {
        let r = bundle_two_sided(&bp(&[1, 1]), 2).unwrap();
        assert_eq!((r.lower, r.upper), (9, 12));
        let r = bundle_two_sided(&bp(&[0, 0]), 1).unwrap();
        assert_eq!((r.lower, r.upper), (4, 4));
        let r = bundle_two_sided(&bp(&[5, 3]), 3).unwrap();
        assert_eq!((r.lower, r.upper), (26, 34));
    }

    #[test]
    fn bundle_consistency_sweep() {
        for ell in [[0u64, 0], [1, 0], [2, 2], [4, 1]] {
            let p = bp(&ell);
            let at_one = bundle_two_sided(&p, 1).unwrap();
            assert_eq!(at_one.lower, at_one.upper);
            assert_eq!(at_one.upper, p.stats().edge_count);
            for t in 1..=5 {
                let r = bundle_two_sided(&p, t).unwrap();
                assert!(r.lower <= r.upper);
                assert!(r.lower >= t);
                assert_eq!(r.upper, UtParams::new(p.clone(), t).unwrap().edge_count());
            }
        }
    }

    #[test]
    fn star_ratios_are_all_one() {
        for d in 1..=5 {
            let seq = ratio_envelope_graph(&Graph::star(d).unwrap(), 4, &[]).unwrap();
            assert_eq!(seq.max_lower, rat(1, 1));
            assert_eq!(seq.inf_upper, rat(1, 1));
            for term in &seq.terms {
                assert_eq!(term.lower_ratio, rat(1, 1));
                assert_eq!(term.upper_ratio, rat(1, 1));
            }
        }
    }

    #[test]
    fn bundle_envelope_example() {
        let seq = ratio_envelope_bundle(&bp(&[1, 1]), 2).unwrap();
        assert_eq!(seq.max_lower, rat(1, 2));
        assert_eq!(seq.inf_upper, rat(1, 1));
        // t=2: host formula gives 12 = 2m, tie goes to the disjoint union
        assert_eq!(seq.terms[1].report.upper, 12);
        assert_eq!(seq.terms[1].report.upper_src, BoundSource::DisjointUnion);
    }

    #[test]
    fn sharper_host_wins_for_larger_t() {
        // B(5,3): m = 12; at t=3 the bundled host has 34 < 36 edges
        let reports = bundle_reports(&bp(&[5, 3]), 3).unwrap();
        assert_eq!(reports[2].upper, 34);
        assert_eq!(reports[2].upper_src, BoundSource::BundleHost);
        assert_eq!(reports[0].upper, 12);
        assert_eq!(reports[0].upper_src, BoundSource::DisjointUnion);
    }

    #[test]
    fn every_ratio_stays_in_band() {
        let graphs = [
            Graph::path(5).unwrap(),
            Graph::cycle(6).unwrap(),
            Graph::complete(4).unwrap(),
            build_bundle(&bp(&[2, 1])).unwrap(),
        ];
        for g in &graphs {
            let m = g.edge_count() as i64;
            let seq = ratio_envelope_graph(g, 6, &[]).unwrap();
            for term in &seq.terms {
                for r in [term.lower_ratio, term.upper_ratio] {
                    assert!(r >= rat(1, m) && r <= rat(1, 1), "{g:?} t={}", term.report.t);
                }
            }
            assert!(seq.max_lower <= seq.inf_upper);
        }
        for ell in [[0u64, 0], [3, 1], [6, 0]] {
            let seq = ratio_envelope_bundle(&bp(&ell), 8).unwrap();
            let m = seq.edge_count as i64;
            for term in &seq.terms {
                assert!(term.upper_ratio <= rat(1, 1));
                assert!(term.lower_ratio >= rat(1, m));
            }
        }
    }

    #[test]
    fn exact_values_substitute() {
        let g = Graph::star(3).unwrap();
        let seq = ratio_envelope_graph(&g, 3, &[(2, 6)]).unwrap();
        let term = &seq.terms[1];
        assert_eq!(term.report.lower, 6);
        assert_eq!(term.report.upper, 6);
        assert_eq!(term.report.lower_src, BoundSource::ExactSolver);
        assert_eq!(term.lower_ratio, rat(1, 1));
    }

    #[test]
    fn self_ramsey_examples() {
        let k2 = Graph::complete(2).unwrap();
        assert_eq!(self_ramsey_upper(&k2, 1).unwrap(), rat(1, 1));
        let two_k2 = Graph::matching(2).unwrap();
        assert_eq!(self_ramsey_upper(&two_k2, 6).unwrap(), rat(6, 4));
        let p3 = Graph::path(3).unwrap();
        assert_eq!(self_ramsey_upper(&p3, 5).unwrap(), rat(5, 2));
    }

    #[test]
    fn family_alpha_one() {
        let f = family_for_alpha(rat(1, 1), 10).unwrap();
        assert_eq!(f.case, FamilyCase::PositiveAlpha { k: 2 });
        assert_eq!(f.params.ell(), &[6, 0]);
        assert_eq!(f.params.stats().max_degree, 8); // N - 2
        assert_eq!(f.params.stats().vertex_count, 10);
    }

    #[test]
    fn family_alpha_zero() {
        let f = family_for_alpha(rat(0, 1), 36).unwrap();
        assert_eq!(f.case, FamilyCase::ZeroAlpha { q: 6, a: 4, r: 0 });
        assert_eq!(f.params.ell(), &[4, 4, 4, 4, 4, 4]);
        assert_eq!(f.s, 24);
        assert_eq!(f.params.stats().vertex_count, 36);
    }

    #[test]
    fn family_alpha_half() {
        let f = family_for_alpha(rat(1, 2), 12).unwrap();
        assert_eq!(f.case, FamilyCase::PositiveAlpha { k: 2 });
        assert_eq!((f.s, f.params.ell()), (8, &[4u64, 4][..]));
    }

    #[test]
    fn family_invariants_on_a_sweep() {
        for (alpha, lo) in [(rat(1, 1), 5), (rat(1, 2), 6), (rat(2, 3), 5), (rat(0, 1), 4)] {
            for n in lo..60u64 {
                let Ok(f) = family_for_alpha(alpha, n) else {
                    continue;
                };
                let sum: u64 = f.params.ell().iter().sum();
                assert_eq!(sum, f.s, "alpha={alpha} N={n}");
                assert_eq!(f.params.stats().vertex_count, n);
                assert!(f.params.ell().windows(2).all(|w| w[0] >= w[1]));
            }
        }
    }

    #[test]
    fn family_infeasible_cases() {
        // alpha = 1/2, odd mass: 2 * floor(7/2) = 6 < 7
        assert!(matches!(
            family_for_alpha(rat(1, 2), 11),
            Err(Error::InfeasibleFamily { .. })
        ));
        assert!(family_for_alpha(rat(0, 1), 3).is_err());
        assert!(family_for_alpha(rat(3, 2), 100).is_err());
        assert!(family_for_alpha(rat(-1, 2), 100).is_err());
    }

    #[test]
    fn decay_envelope_closed_forms() {
        let a = AsymptoticParams::new(2.0, 100, 1.0).unwrap();
        let want = (100f64).ln() / 100.0;
        assert!((core_growth_envelope(&a).unwrap() - want).abs() < 1e-12);

        // c = 3, M = e^2: (2 / e^2)^(1/2)
        let m = (std::f64::consts::E * std::f64::consts::E).round() as u64; // 7
        let a = AsymptoticParams::new(3.0, m, 1.0).unwrap();
        let want = ((m as f64).ln() / m as f64).sqrt();
        assert!((core_growth_envelope(&a).unwrap() - want).abs() < 1e-12);

        // decreasing in M from 3 on
        let mut prev = f64::INFINITY;
        for mm in 3..60 {
            let v = core_growth_envelope(&AsymptoticParams::new(2.5, mm, 1.0).unwrap()).unwrap();
            assert!(v < prev, "M={mm}");
            prev = v;
        }

        assert!(AsymptoticParams::new(1.0, 10, 1.0).is_err());
        assert!(AsymptoticParams::new(2.0, 10, 0.0).is_err());
        assert!(core_growth_envelope(&AsymptoticParams::new(2.0, 1, 1.0).unwrap()).is_err());
    }

    #[test]
    fn host_size_bound_formula() {
        for n in [2u64, 10, 1000] {
            let nf = n as f64;
            let want = nf.powf(1.5) * nf.ln().sqrt();
            assert!((bounded_degree_upper(2, n, 1.0).unwrap() - want).abs() < 1e-9 * want.max(1.0));
        }
        // linear in C
        let base = bounded_degree_upper(3, 50, 1.0).unwrap();
        assert!((bounded_degree_upper(3, 50, 2.5).unwrap() - 2.5 * base).abs() < 1e-9);
        assert!(bounded_degree_upper(1, 50, 1.0).is_err());
        assert!(bounded_degree_upper(2, 1, 1.0).is_err());
        assert!(bounded_degree_upper(2, 50, 0.0).is_err());
    }
}
