use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::One;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::{CorpusEntry, DEFAULT_SEED};
use crate::algebra::{charpoly_exact, polymat_det, PolyMatrix, RatPolynomial, Rational, RationalMatrix};
use crate::error::Result;
use crate::spectra::{self, compare, map_a_spectrum, map_t_spectrum, SpectrumMultiset};
use crate::walk::{
    edge_matrices, positive_support, t_matrix, t_matrix_via_degrees, transition_matrix, verify_edge_matrix_support,
    WeightedMatrix,
};
use crate::zeta::{
    enumerate_reduced_cycles, euler_product_oracle, ihara_reciprocal_bass_form, ihara_reciprocal_edge_form,
    power_traces, weighted_zeta_reciprocal, PowerSeries, ORACLE_MAX_ARCS,
};

/// Every check the suite runs, in report order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Identity {
    CharpolyUViaT,
    CharpolyUViaDegrees,
    BassIdentity,
    WeightedZeta,
    EdgeMatrixSupport,
    CharpolyUPlus,
    SpectrumUFromT,
    SpectrumUPlusFromA,
    EulerProduct,
    TraceIdentity,
    Orthogonality,
    StochasticT,
    SelfReciprocal,
    ConjugateClosure,
}

impl Identity {
    pub const ALL: [Identity; 14] = [
        Identity::CharpolyUViaT,
        Identity::CharpolyUViaDegrees,
        Identity::BassIdentity,
        Identity::WeightedZeta,
        Identity::EdgeMatrixSupport,
        Identity::CharpolyUPlus,
        Identity::SpectrumUFromT,
        Identity::SpectrumUPlusFromA,
        Identity::EulerProduct,
        Identity::TraceIdentity,
        Identity::Orthogonality,
        Identity::StochasticT,
        Identity::SelfReciprocal,
        Identity::ConjugateClosure,
    ];

    /// Snake-case name, as serialized.
    pub fn name(self) -> String {
        let debug = format!("{self:?}");
        let mut out = String::new();
        for (i, ch) in debug.chars().enumerate() {
            if ch.is_uppercase() && i > 0 {
                out.push('_');
            }
            out.extend(ch.to_lowercase());
        }
        out
    }

    pub fn description(self) -> &'static str {
        match self {
            Identity::CharpolyUViaT => "det(xI - U) = (x^2-1)^(m-n) det((x^2+1)I - 2xT)",
            Identity::CharpolyUViaDegrees => "det(xI - U) = (x^2-1)^(m-n) det((x^2+1)D - 2xA) / prod d",
            Identity::BassIdentity => "det(I - t(B-J0)) = (1-t^2)^(r-1) det(I - tA + t^2(D-I))",
            Identity::WeightedZeta => "det(I - t(B_w-J0)) = (1-t^2)^(m-n) det(I - tW + t^2(D_w-I))",
            Identity::EdgeMatrixSupport => "B - J0 = (U^T)^+ on simple md2 graphs",
            Identity::CharpolyUPlus => "det(xI - U+) = (x^2-1)^(m-n) det((x^2-1)I - xA + D) on md2 graphs",
            Identity::SpectrumUFromT => "Spec(U) = {l_T +- i sqrt(1 - l_T^2)} + (m-n) x {+1, -1}",
            Identity::SpectrumUPlusFromA => "Spec(U+) = {l_A/2 +- i sqrt(k-1 - l_A^2/4)} + (m-n) x {+1, -1}",
            Identity::EulerProduct => "1/det(I - t(B-J0)) = prod over prime reduced cycles (1 - t^|C|)^-1",
            Identity::TraceIdentity => "log(1/det(I - t(B-J0))) = sum tr((B-J0)^k) t^k / k",
            Identity::Orthogonality => "U^T U = I",
            Identity::StochasticT => "T rows sum to 1 and T = D^-1 A",
            Identity::SelfReciprocal => "x^2m p(1/x) = +-p(x) for p = det(xI - U)",
            Identity::ConjugateClosure => "numeric spectra are closed under conjugation",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SuiteConfig {
    pub seed: u64,
    pub weight_trials: usize,
    pub tolerance: f64,
    pub order: usize,
    /// Largest vertex count for which the cycle enumeration runs.
    pub oracle_max_vertices: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            seed: DEFAULT_SEED,
            weight_trials: 10,
            tolerance: spectra::DEFAULT_TOLERANCE,
            order: crate::zeta::DEFAULT_ORDER,
            oracle_max_vertices: 5,
        }
    }
}

/// First failure of an identity, enough to reproduce it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub graph: String,
    pub detail: String,
    /// Exact `lhs - rhs` when both sides are polynomials.
    pub residual: Option<RatPolynomial>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityOutcome {
    pub identity: Identity,
    pub description: &'static str,
    pub checked: usize,
    pub failed: usize,
    pub witness: Option<Witness>,
}

impl IdentityOutcome {
    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

/// Prime reduced cycle classes per length: `(paired with a distinct
/// inverse, self-inverse)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CyclePairing {
    pub graph: String,
    pub by_length: BTreeMap<usize, (usize, usize)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub config: SuiteConfig,
    pub graphs: Vec<String>,
    pub outcomes: Vec<IdentityOutcome>,
    pub cycle_pairing: Vec<CyclePairing>,
    #[serde(skip)]
    pub timings: Vec<(Identity, Duration)>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.outcomes.iter().all(IdentityOutcome::passed)
    }

    pub fn outcome(&self, identity: Identity) -> Option<&IdentityOutcome> {
        self.outcomes.iter().find(|o| o.identity == identity)
    }

    /// Plain-text table: one line per identity with counts and time.
    pub fn summary_table(&self) -> String {
        let mut out = format!(
            "seed={} weight_trials={} tolerance={:e} order={} graphs={}\n",
            self.config.seed,
            self.config.weight_trials,
            self.config.tolerance,
            self.config.order,
            self.graphs.len()
        );
        out.push_str(&format!(
            "{:<24} {:>7} {:>6} {:>10}  {}\n",
            "identity", "checked", "failed", "time_ms", "status"
        ));
        for o in &self.outcomes {
            let ms = self
                .timings
                .iter()
                .find(|(id, _)| *id == o.identity)
                .map_or(0, |(_, d)| d.as_millis());
            let status = match &o.witness {
                None => "ok".to_string(),
                Some(w) => format!("FAIL on {}: {}", w.graph, w.detail),
            };
            let name = o.identity.name();
            out.push_str(&format!(
                "{:<24} {:>7} {:>6} {:>10}  {}\n",
                name, o.checked, o.failed, ms, status
            ));
        }
        out
    }
}

/// Multiplies by `(x^2 - 1)^exponent`; a negative exponent is an exact
/// division.
pub fn apply_lambda_prefactor(p: &RatPolynomial, exponent: i64) -> Result<RatPolynomial> {
    let base = RatPolynomial::from_i64(&[-1, 0, 1]).pow(exponent.unsigned_abs() as u32);
    if exponent >= 0 {
        Ok(p * &base)
    } else {
        p.divexact(&base)
    }
}

enum Check {
    Pass,
    Fail(String, Option<RatPolynomial>),
}

fn poly_check(lhs: &RatPolynomial, rhs: &RatPolynomial, what: &str) -> Check {
    if lhs == rhs {
        Check::Pass
    } else {
        Check::Fail(format!("{what}: sides differ"), Some(lhs - rhs))
    }
}

fn from_result(result: Result<Check>) -> Check {
    result.unwrap_or_else(|e| Check::Fail(e.to_string(), None))
}

#[derive(Default)]
struct GraphChecks {
    results: Vec<(Identity, Check, Duration)>,
    pairing: Option<CyclePairing>,
}

impl GraphChecks {
    fn run(&mut self, identity: Identity, f: impl FnOnce() -> Result<Check>) {
        let start = Instant::now();
        let check = from_result(f());
        self.results.push((identity, check, start.elapsed()));
    }
}

fn name_seed(seed: u64, name: &str) -> u64 {
    // FNV-1a over the graph name, mixed with the suite seed.
    name.bytes()
        .fold(0xcbf2_9ce4_8422_2325u64 ^ seed, |h, b| (h ^ u64::from(b)).wrapping_mul(0x100_0000_01b3))
}

fn int(v: usize) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

fn spectra_check(lhs: &SpectrumMultiset, rhs: &SpectrumMultiset) -> Check {
    let cmp = compare(lhs, rhs);
    if cmp.equal {
        Check::Pass
    } else {
        Check::Fail(format!("max pair distance {:e}", cmp.max_pair_distance), None)
    }
}

fn check_entry(entry: &CorpusEntry, config: &SuiteConfig) -> GraphChecks {
    let mut out = GraphChecks::default();
    let g = &entry.graph;
    if let Err(e) = g.require_connected() {
        out.results.push((Identity::CharpolyUViaT, Check::Fail(e.to_string(), None), Duration::ZERO));
        return out;
    }
    let arcs = g.arcs();
    let (n, m) = (g.vertex_count(), g.edge_count());
    let exponent = m as i64 - n as i64;
    let u = transition_matrix(g, &arcs).expect("connected").into_matrix();
    let t = t_matrix(g).expect("connected");
    let a = g.adjacency_matrix();
    let d = g.degree_matrix();
    let identity_n = RationalMatrix::identity(n);

    out.run(Identity::Orthogonality, || {
        Ok(if u.transpose().matmul(&u)? == RationalMatrix::identity(2 * m) {
            Check::Pass
        } else {
            Check::Fail("U^T U differs from I".into(), None)
        })
    });
    out.run(Identity::StochasticT, || {
        let rows_ok = t.row_sums().iter().all(One::is_one);
        Ok(if rows_ok && t == t_matrix_via_degrees(g)? {
            Check::Pass
        } else {
            Check::Fail("T is not D^-1 A with unit row sums".into(), None)
        })
    });

    let start = Instant::now();
    let char_u = charpoly_exact(&u);
    let char_u_time = start.elapsed();
    let char_u = match char_u {
        Ok(p) => p,
        Err(e) => {
            out.results.push((Identity::CharpolyUViaT, Check::Fail(e.to_string(), None), char_u_time));
            return out;
        }
    };

    out.run(Identity::SelfReciprocal, || {
        let rev = char_u.reversed(2 * m);
        Ok(if rev == char_u || rev == -&char_u {
            Check::Pass
        } else {
            Check::Fail("charpoly(U) is not self-reciprocal".into(), Some(&rev - &char_u))
        })
    });
    out.run(Identity::CharpolyUViaT, || {
        let minus_two_t = t.scale(&Rational::from_integer(BigInt::from(-2)));
        let det = polymat_det(&PolyMatrix::quadratic(&identity_n, &minus_two_t, &identity_n)?, 2 * n)?;
        Ok(poly_check(&char_u, &apply_lambda_prefactor(&det, exponent)?, "charpoly(U) vs T form"))
    });
    if let Some((_, Check::Pass, time)) = out.results.last_mut() {
        *time += char_u_time;
    }
    out.run(Identity::CharpolyUViaDegrees, || {
        let minus_two_a = a.scale(&Rational::from_integer(BigInt::from(-2)));
        let det = polymat_det(&PolyMatrix::quadratic(&d, &minus_two_a, &d)?, 2 * n)?;
        let degree_product = g.degree_info().degrees.iter().fold(Rational::one(), |acc, &k| acc * int(k));
        let det = det.scale(&degree_product.recip());
        Ok(poly_check(&char_u, &apply_lambda_prefactor(&det, exponent)?, "charpoly(U) vs D/A form"))
    });

    let mut edge_form = None;
    out.run(Identity::BassIdentity, || {
        let edge = ihara_reciprocal_edge_form(&arcs)?;
        let bass = ihara_reciprocal_bass_form(g)?;
        let check = match bass.as_polynomial() {
            Some(p) => poly_check(&edge, p, "edge form vs vertex form"),
            None => Check::Fail("vertex form does not reduce to a polynomial".into(), None),
        };
        edge_form = Some(edge);
        Ok(check)
    });

    out.run(Identity::WeightedZeta, || {
        let mut rng = ChaCha8Rng::seed_from_u64(name_seed(config.seed, &entry.name));
        for trial in 0..config.weight_trials {
            let w = WeightedMatrix::random(g, &mut rng);
            let z = weighted_zeta_reciprocal(g, &w)?;
            if !z.forms_agree() {
                let residual = z.bass_form.as_polynomial().map(|p| &z.edge_form - p);
                return Ok(Check::Fail(format!("weight trial {trial}"), residual));
            }
        }
        Ok(Check::Pass)
    });

    if entry.tags.simple && entry.tags.md2 {
        out.run(Identity::EdgeMatrixSupport, || {
            Ok(if verify_edge_matrix_support(g)? {
                Check::Pass
            } else {
                Check::Fail("(U^T)^+ differs from B - J0".into(), None)
            })
        });
    }

    let mut char_u_plus = None;
    if entry.tags.md2 {
        out.run(Identity::CharpolyUPlus, || {
            let cup = charpoly_exact(&positive_support(&u))?;
            let shifted = d.sub(&identity_n)?;
            let det = polymat_det(&PolyMatrix::quadratic(&shifted, &a.scale(&-Rational::one()), &identity_n)?, 2 * n)?;
            let check = poly_check(&cup, &apply_lambda_prefactor(&det, exponent)?, "charpoly(U+) vs A/D form");
            char_u_plus = Some(cup);
            Ok(check)
        });
    }

    // Numeric spectra.
    let mut numeric: Vec<SpectrumMultiset> = Vec::new();
    let tol = config.tolerance;
    let spec_u = spectra::roots(&char_u).map(|s| s.with_tolerance(tol));
    let spec_t = charpoly_exact(&t).and_then(|p| spectra::roots(&p)).map(|s| s.with_tolerance(tol));
    if m >= n {
        out.run(Identity::SpectrumUFromT, || {
            let (su, st) = (spec_u.clone()?, spec_t.clone()?);
            let mapped = map_t_spectrum(&st.real_values()?, m, n, tol)?;
            Ok(spectra_check(&su, &mapped))
        });
    }
    if let (Some(k), true, Some(cup)) = (entry.tags.regular_k, entry.tags.md2, &char_u_plus) {
        out.run(Identity::SpectrumUPlusFromA, || {
            let sup = spectra::roots(cup)?.with_tolerance(tol);
            let sa = spectra::roots(&charpoly_exact(&a)?)?.with_tolerance(tol);
            let mapped = map_a_spectrum(&sa.real_values()?, k, m, n, tol)?;
            let check = spectra_check(&sup, &mapped);
            numeric.push(sup);
            numeric.push(sa);
            Ok(check)
        });
    }
    out.run(Identity::ConjugateClosure, || {
        numeric.push(spec_u?);
        numeric.push(spec_t?);
        Ok(match numeric.iter().position(|s| !s.is_conjugate_closed()) {
            None => Check::Pass,
            Some(i) => Check::Fail(format!("spectrum #{i} is not conjugate-closed"), None),
        })
    });

    let order = config.order;
    let edge_matrix = edge_matrices(&arcs).edge_matrix();
    out.run(Identity::TraceIdentity, || {
        let edge = match &edge_form {
            Some(p) => p.clone(),
            None => ihara_reciprocal_edge_form(&arcs)?,
        };
        let log = PowerSeries::from_poly(&edge, order).inverse()?.log()?;
        let traces = power_traces(&edge_matrix, order)?;
        Ok(match (1..=order).find(|&k| log.coeffs()[k] != &traces[k] / int(k)) {
            Some(k) => Check::Fail(format!("coefficient of t^{k}"), None),
            None => Check::Pass,
        })
    });

    if n <= config.oracle_max_vertices && arcs.len() <= ORACLE_MAX_ARCS {
        out.run(Identity::EulerProduct, || {
            let edge = match &edge_form {
                Some(p) => p.clone(),
                None => ihara_reciprocal_edge_form(&arcs)?,
            };
            let expected = PowerSeries::from_poly(&edge, order).inverse()?;
            let series = euler_product_oracle(&arcs, order)?;
            let cycles = enumerate_reduced_cycles(&arcs, order)?;
            let traces = power_traces(&edge_matrix, order)?;
            if series != expected {
                let residual: Vec<Rational> =
                    series.coeffs().iter().zip(expected.coeffs()).map(|(x, y)| x - y).collect();
                return Ok(Check::Fail(
                    "cycle product differs from the reciprocal series".into(),
                    Some(RatPolynomial::new(residual)),
                ));
            }
            if let Some(k) = (1..=order).find(|&k| int(cycles.walk_counts[k] as usize) != traces[k]) {
                return Ok(Check::Fail(format!("closed reduced walk count at length {k}"), None));
            }
            Ok(Check::Pass)
        });
        if let Ok(cycles) = enumerate_reduced_cycles(&arcs, order) {
            out.pairing = Some(CyclePairing {
                graph: entry.name.clone(),
                by_length: cycles.inverse_pairing(&arcs),
            });
        }
    }
    out
}

/// Runs every applicable check on every corpus entry. Entries are processed
/// in parallel; the report is assembled in corpus order.
pub fn run_identity_suite(corpus: &[CorpusEntry], config: &SuiteConfig) -> VerificationReport {
    let per_graph: Vec<GraphChecks> = corpus.par_iter().map(|entry| check_entry(entry, config)).collect();
    let mut outcomes: Vec<IdentityOutcome> = Identity::ALL
        .iter()
        .map(|&identity| IdentityOutcome {
            identity,
            description: identity.description(),
            checked: 0,
            failed: 0,
            witness: None,
        })
        .collect();
    let mut timings: Vec<(Identity, Duration)> = Identity::ALL.iter().map(|&i| (i, Duration::ZERO)).collect();
    let mut cycle_pairing = Vec::new();
    for (entry, checks) in corpus.iter().zip(per_graph) {
        for (identity, check, time) in checks.results {
            let idx = Identity::ALL.iter().position(|&i| i == identity).expect("listed");
            let outcome = &mut outcomes[idx];
            timings[idx].1 += time;
            outcome.checked += 1;
            if let Check::Fail(detail, residual) = check {
                outcome.failed += 1;
                outcome.witness.get_or_insert(Witness {
                    graph: entry.name.clone(),
                    detail,
                    residual,
                });
            }
        }
        cycle_pairing.extend(checks.pairing);
    }
    VerificationReport {
        config: *config,
        graphs: corpus.iter().map(|e| e.name.clone()).collect(),
        outcomes,
        cycle_pairing,
        timings,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families;

    #[test]
    fn prefactor_division_for_trees() {
        // (x-1)^2 (x+1)^2 (x^2+1) / (x^2-1) = x^4 - 1
        let num = &RatPolynomial::from_i64(&[-1, 0, 1]).pow(2) * &RatPolynomial::from_i64(&[1, 0, 1]);
        assert_eq!(apply_lambda_prefactor(&num, -1).unwrap(), RatPolynomial::from_i64(&[-1, 0, 0, 0, 1]));
        assert!(apply_lambda_prefactor(&RatPolynomial::from_i64(&[1, 0, 1]), -1).is_err());
    }

    #[test]
    fn small_suite_passes() {
        let corpus = vec![
            CorpusEntry::new("P3", families::path(3)),
            CorpusEntry::new("C3", families::cycle(3)),
            CorpusEntry::new("K4", families::complete(4)),
            CorpusEntry::new("doubled-triangle", families::doubled_triangle()),
        ];
        let report = run_identity_suite(&corpus, &SuiteConfig { weight_trials: 2, ..SuiteConfig::default() });
        assert!(report.all_passed(), "{}", report.summary_table());
        assert_eq!(report.outcome(Identity::EdgeMatrixSupport).unwrap().checked, 2);
        assert_eq!(report.outcome(Identity::SpectrumUFromT).unwrap().checked, 3);
        assert_eq!(report.outcome(Identity::EulerProduct).unwrap().checked, 4);
    }

    #[test]
    fn identity_names() {
        assert_eq!(Identity::CharpolyUViaT.name(), "charpoly_u_via_t");
        assert_eq!(Identity::SpectrumUPlusFromA.name(), "spectrum_u_plus_from_a");
    }
}
