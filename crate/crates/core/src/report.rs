//! Named verification suites and the report they produce.

use std::collections::BTreeMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::Error;
use crate::exact::{format_rational, int, rat, Rational, Ring};
use crate::hecke;
use crate::icosa::{self, MobiusGen};
use crate::localfield;
use crate::qcurve::{self, IsogenyVariant, Orientation, Q5};
use crate::quintic::{self, Convention, IntTrinomial, Quintic};
use crate::repn;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub id: String,
    pub description: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub status: Status,
    pub seed: u64,
    pub options: BTreeMap<String, String>,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u64>,
}

impl VerificationReport {
    pub fn new(suite: &str, opts: &VerifyOptions) -> Self {
        let options = BTreeMap::from([
            ("samples".to_string(), opts.samples.to_string()),
            ("height".to_string(), opts.height.to_string()),
        ]);
        VerificationReport {
            suite: suite.to_string(),
            status: Status::Pass,
            seed: opts.seed,
            options,
            checks: Vec::new(),
            wall_time_ms: None,
        }
    }

    /// Pass iff every non-skipped check passes.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    fn push(&mut self, id: &str, description: &str, ok: bool, witness: Option<String>) {
        self.checks.push(Check {
            id: id.to_string(),
            description: description.to_string(),
            status: if ok { Status::Pass } else { Status::Fail },
            witness,
        });
        self.status = if self.passed() { Status::Pass } else { Status::Fail };
    }

    fn push_result(&mut self, id: &str, description: &str, r: Result<(bool, Option<String>), Error>) {
        match r {
            Ok((ok, w)) => self.push(id, description, ok, w),
            Err(e) => self.push(id, description, false, Some(format!("error: {e}"))),
        }
    }

    pub fn merge(&mut self, other: VerificationReport) {
        for c in other.checks {
            self.checks.push(Check { id: format!("{}.{}", other.suite, c.id), ..c });
        }
        self.status = if self.passed() { Status::Pass } else { Status::Fail };
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    pub samples: usize,
    pub seed: u64,
    pub height: u32,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { samples: 20, seed: 0, height: 1000 }
    }
}

pub const SUITES: [&str; 7] = ["icosa", "klein-link", "qcurve", "repn", "hecke", "localfield", "all"];

pub fn run_suite(name: &str, opts: &VerifyOptions) -> Result<VerificationReport, Error> {
    match name {
        "icosa" => Ok(icosa_suite(opts)),
        "klein-link" => Ok(klein_link_suite(opts)),
        "qcurve" => Ok(qcurve_suite(opts)),
        "repn" => Ok(repn_suite(opts)),
        "hecke" => Ok(hecke_suite(opts)),
        "localfield" => Ok(localfield_suite(opts)),
        "all" => {
            let mut all = VerificationReport::new("all", opts);
            for s in &SUITES[..SUITES.len() - 1] {
                all.merge(run_suite(s, opts)?);
            }
            Ok(all)
        }
        other => Err(Error::Unsupported(format!("unknown suite '{other}'"))),
    }
}

pub fn icosa_suite(opts: &VerifyOptions) -> VerificationReport {
    let mut r = VerificationReport::new("icosa", opts);
    r.push(
        "fundamental-identity",
        "(l+3)^3(l^2+11l+64) = (m^2+10m+5)^3/m over Q",
        icosa::verify_fundamental_identity(),
        None,
    );
    let inv = match icosa::build_invariants() {
        Ok(inv) => inv,
        Err(e) => {
            r.push("invariants", "build lambda, mu, j", false, Some(e.to_string()));
            return r;
        }
    };
    for g in MobiusGen::all() {
        let id = format!("invariance-{:?}", g.label);
        r.push_result(
            &id,
            "j o g = j (for S also mu o S = mu and lambda o S != lambda)",
            icosa::verify_invariance(&g, &inv).map(|c| {
                let w = format!(
                    "j:{} mu:{} lambda:{}",
                    c.j_invariant, c.mu_invariant, c.lambda_invariant
                );
                (c.passed(), Some(w))
            }),
        );
    }
    for (conv, id, desc) in [
        (Convention::Displayed, "resolvent-grid", "x_nu roots of x^5 + Ax^2 + Bx + C on the 6x6 grid"),
        (
            Convention::Consistent,
            "resolvent-grid-consistent",
            "same, with 12n in x_nu and -559872 n^4 in B",
        ),
    ] {
        r.push_result(
            id,
            desc,
            icosa::verify_resolvent_grid(&inv, conv).map(|checks| {
                let bad: Vec<String> = checks
                    .iter()
                    .filter(|c| !c.passed())
                    .map(|c| format!("({},{})", c.m, c.n))
                    .collect();
                let w = if bad.is_empty() {
                    format!("{} points", checks.len())
                } else {
                    format!("{} of {} points fail: {}", bad.len(), checks.len(), bad.join(" "))
                };
                (bad.is_empty(), Some(w))
            }),
        );
    }
    r
}

pub const KLEIN_SAMPLES: [(i64, i64); 5] = [(2, 1), (-25, 3), (1, 1), (7, 11), (-1000, 1)];

pub fn klein_link_suite(opts: &VerifyOptions) -> VerificationReport {
    let mut r = VerificationReport::new("klein-link", opts);
    for (orientation, suffix) in [(Orientation::Displayed, ""), (Orientation::Negated, "-negated")] {
        for &(p, q) in &KLEIN_SAMPLES {
            let j = rat(p, q);
            let id = format!("j={}{}", format_rational(&j), suffix);
            r.push_result(
                &id,
                "q'(mu) divides the forward transform of g; q'(mu(x)) = 0 mod g",
                qcurve::verify_klein_link_with(&j, &int(31104), orientation).map(|c| {
                    let w = format!(
                        "forward_divides:{} scalar_multiple:{} backward:{}",
                        c.forward_divides, c.forward_scalar_multiple, c.backward_vanishes
                    );
                    (c.passed(), Some(w))
                }),
            );
        }
    }
    r
}

/// t values tried in turn for the finite-field composition check.
const COMPOSITION_T: [(i64, i64); 4] = [(1, 1), (3, 1), (4, 3), (3, 2)];

pub fn qcurve_suite(opts: &VerifyOptions) -> VerificationReport {
    let mut r = VerificationReport::new("qcurve", opts);
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    r.push_result(
        "isogeny-codomain",
        "phi maps E_t onto E_t^sigma, t symbolic",
        qcurve::verify_isogeny_codomain().map(|ok| (ok, None)),
    );
    for p in qcurve::admissible_primes(3) {
        let result = COMPOSITION_T
            .iter()
            .find_map(|&(a, b)| {
                qcurve::verify_isogeny_composition(
                    p,
                    &rat(a, b),
                    opts.samples,
                    IsogenyVariant::Standard,
                    &mut rng,
                )
                .ok()
                .map(|c| (c, rat(a, b)))
            })
            .ok_or_else(|| Error::Unsupported(format!("no t with good reduction mod {p}")));
        r.push_result(
            &format!("composition-p{p}"),
            "phi^sigma(phi(P)) = [-2]P on random points",
            result.map(|(c, t)| {
                let mut w = format!("t={} trials={} failures={}", format_rational(&t), c.trials, c.failures);
                if let Some(warn) = &c.warning {
                    w.push_str(&format!(" ({warn})"));
                }
                (c.passed(), Some(w))
            }),
        );
    }
    r.push_result("j-E1", "j(E_1) = j(y^2 = x^3 + (5-s5)x^2 + s5 x)", j_e1_matches().map(|ok| (ok, None)));
    r.push_result(
        "j-equation-buhler",
        "j(E_1) is a root of the j-equation of x^5 + 4x + 16/5",
        j_root_of_equation(&int(4), &rat(16, 5)).map(|ok| (ok, None)),
    );
    let family = random_family_members(&mut rng, 5);
    let mut witnesses = Vec::new();
    let mut all = true;
    for t in &family {
        let ok = quintic::family_quintic(t).and_then(|q| j_root_of_equation(&q.b, &q.c));
        all &= matches!(ok, Ok(true));
        witnesses.push(format!("t={}:{}", format_rational(t), matches!(ok, Ok(true))));
    }
    r.push("j-equation-family", "j(E_t) is a root of the j-equation of q_t", all, Some(witnesses.join(" ")));
    r.push_result(
        "hyperelliptic-search",
        "no rational points of height <= H on y^2 = 15(x^2+1)(2x^3+2x^2-x+1)(x^3+x^2+2x-2)",
        quintic::hyperelliptic_search(opts.height).map(|pts| {
            let w = if pts.is_empty() {
                format!("none up to height {}", opts.height)
            } else {
                pts.iter()
                    .map(|(x, y)| format!("({},{})", format_rational(x), format_rational(y)))
                    .collect::<Vec<_>>()
                    .join(" ")
            };
            (pts.is_empty(), Some(w))
        }),
    );
    r
}

pub fn j_e1_matches() -> Result<bool, Error> {
    let e1 = qcurve::curve_from_t_rational(&int(1))?;
    let s5 = Q5::sqrt5();
    let other = qcurve::EllipticCurve::new(Q5::from_int(5).sub(&s5), s5, Q5::zero())?;
    Ok(e1.j_invariant()? == other.j_invariant()?)
}

/// j(E_t) with t = 75C²/√Disc satisfies the j-equation of x⁵ + Bx + C.
pub fn j_root_of_equation(b: &Rational, c: &Rational) -> Result<bool, Error> {
    let t = quintic::trinomial_t(b, c)?
        .ok_or_else(|| Error::Degenerate("discriminant is not a square".into()))?;
    let j = qcurve::curve_from_t_rational(&t)?.j_invariant()?;
    let inv = quintic::invariants(&Quintic::trinomial(b.clone(), c.clone()));
    let [a2, a1, a0] = quintic::j_equation(&inv);
    let lift = |q: Rational| Q5::from_scalar(q);
    let value = lift(a2).mul(&j.square()).add(&lift(a1).mul(&j)).add(&lift(a0));
    Ok(value.is_zero())
}

pub fn random_family_members(rng: &mut ChaCha8Rng, count: usize) -> Vec<Rational> {
    use rand::Rng;
    (0..count)
        .map(|_| {
            let p = rng.gen_range(1..=40i64) * if rng.gen_bool(0.5) { 1 } else { -1 };
            let q = rng.gen_range(1..=40i64);
            rat(p, q)
        })
        .collect()
}

pub fn repn_suite(opts: &VerifyOptions) -> VerificationReport {
    let mut r = VerificationReport::new("repn", opts);
    r.push_result(
        "varpi-identities",
        "2-e = e^2 w w^c, 2-w5(2) = e w (e w^c - 1), s5 = e w w^c, all in lambda",
        repn::verify_varpi_identities().map(|c| (c.passed(), None)),
    );
    r.push_result(
        "relations",
        "generator orders, relations (1)-(3), and failure of (2) for n = +-2",
        repn::verify_relations().map(|c| (c.passed(), Some(format!("{c:?}")))),
    );
    let group = match repn::enumerate_group() {
        Ok(g) => g,
        Err(e) => {
            r.push("enumerate", "Z(F5)*SL2(F5) by BFS", false, Some(e.to_string()));
            return r;
        }
    };
    r.push("enumerate", "Z(F5)*SL2(F5) by BFS", group.len() == 240, Some(format!("{} elements", group.len())));
    r.push_result(
        "congruence",
        "pi reduces to the identity embedding mod lambda and is faithful",
        repn::verify_congruence(&group).map(|c| {
            let w = format!(
                "distinct images {}; literal reading pi = 1 mod lambda holds: {}",
                c.distinct_images, c.literal_trivial
            );
            (c.passed(), Some(w))
        }),
    );
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    r.push_result(
        "homomorphism",
        "pi(g)pi(h) = pi(gh) on random pairs",
        repn::verify_homomorphism(&group, Some(opts.samples.max(200)), &mut rng)
            .map(|ok| (ok, Some(format!("{} pairs", opts.samples.max(200))))),
    );
    r
}

pub fn hecke_suite(opts: &VerifyOptions) -> VerificationReport {
    let mut r = VerificationReport::new("hecke", opts);
    let w = match hecke::omega() {
        Ok(w) => w,
        Err(e) => {
            r.push("omega", "build w = w4^3 w8^3 w5", false, Some(e.to_string()));
            return r;
        }
    };
    r.push(
        "multiplicative",
        "omega is multiplicative on all units mod 8 sqrt5",
        w.is_multiplicative(),
        Some(format!("{} units, image of order {}", w.table.len(), w.image_order())),
    );
    r.push_result(
        "sigma-identity",
        "w(sigma x)/w(x) = (-2/N x) on every unit",
        hecke::verify_sigma_identity(&w).map(|c| (c.passed(), Some(format!("{} units", c.units)))),
    );
    r.push_result(
        "square-identity",
        "w(x)^2 = (-1/N x) w5(N x)^-1 on every unit",
        hecke::verify_square_identity(&w).map(|c| (c.passed(), Some(format!("{} units", c.units)))),
    );
    r.push_result(
        "positive-units",
        "w(e^2) = 1",
        hecke::verify_positive_units(&w).map(|p| {
            let wtn = format!(
                "w(e)={} w(e^2)={} w(e^4)={} w(-1)={}",
                p.omega_eps, p.omega_eps2, p.omega_eps4, p.omega_minus_one
            );
            (p.passed(), Some(wtn))
        }),
    );
    r.push_result(
        "teichmuller",
        "Hecke w5 agrees with the Teichmuller character on rational units",
        hecke::teichmuller_compatible().map(|ok| (ok, None)),
    );
    r
}

pub fn localfield_suite(opts: &VerifyOptions) -> VerificationReport {
    let mut r = VerificationReport::new("localfield", opts);
    r.push_result(
        "artin-schreier",
        "q_t(x/(5y/4))(5y/4)^5 = x^5 - x - y with t = u^2",
        localfield::artin_schreier_identity().map(|ok| (ok, None)),
    );
    let table = [(int(1), true), (int(3), false), (rat(3, 5), false), (rat(4, 9), true)];
    let ok = table.iter().all(|(t, want)| localfield::is_square_5adic_unit(t) == *want);
    r.push("square-units", "1, 3, 3/5, 4/9 -> T, F, F, T", ok, None);
    let triple = [((int(4), rat(16, 5)), true), ((int(20), int(-16)), false), ((int(-4), rat(16, 5)), false)];
    r.push_result(
        "hypothesis-examples",
        "Buhler true; (20,-16) and (-4,16/5) false",
        triple
            .iter()
            .map(|((b, c), want)| localfield::theorem_hypothesis(b, c).map(|v| v == *want))
            .collect::<Result<Vec<_>, _>>()
            .map(|v| (v.iter().all(|b| *b), None)),
    );
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let us = random_5adic_units(&mut rng, opts.samples);
    let family_ok = us.iter().try_fold(true, |acc, u| {
        let q = quintic::family_quintic(&(u * u))?;
        Ok::<bool, Error>(acc && localfield::theorem_hypothesis(&q.b, &q.c)?)
    });
    r.push_result(
        "hypothesis-family",
        "theorem hypothesis holds for q_{u^2} with u a 5-adic unit",
        family_ok.map(|ok| (ok, Some(format!("{} samples", us.len())))),
    );
    r
}

pub fn random_5adic_units(rng: &mut ChaCha8Rng, count: usize) -> Vec<Rational> {
    use rand::Rng;
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let p = rng.gen_range(1..=60i64) * if rng.gen_bool(0.5) { 1 } else { -1 };
        let q = rng.gen_range(1..=60i64);
        let u = rat(p, q);
        if localfield::v5(&u) == localfield::Valuation5::Finite(0) {
            out.push(u);
        }
    }
    out
}

/// One row of the table of A₅-quintics unramified outside {2, 5, ∞}.
pub struct TableRow {
    pub original: &'static str,
    pub principal: IntTrinomial,
    /// trinomial form of the original quintic, when it has one
    pub original_trinomial: Option<IntTrinomial>,
    pub listed: Vec<Rational>,
}

pub fn table_rows() -> Vec<TableRow> {
    vec![
        TableRow {
            original: "x^5 + 20x - 16",
            principal: IntTrinomial::new(4, -25, 50),
            original_trinomial: Some(IntTrinomial::new(1, 20, -16)),
            listed: vec![rat(3, 5), rat(15, 11)],
        },
        TableRow {
            original: "x^5 + 10x^3 - 10x^2 + 35x - 18",
            principal: IntTrinomial::new(5, 20, 16),
            original_trinomial: None,
            listed: vec![int(1)],
        },
        TableRow {
            original: "x^5 - 10x^3 + 20x^2 + 110x - 116",
            principal: IntTrinomial::new(5, -20, 16),
            original_trinomial: None,
            listed: vec![int(3)],
        },
        TableRow {
            original: "x^5 + 10x^3 - 40x^2 + 60x - 32",
            principal: IntTrinomial::new(5, -5, 4),
            original_trinomial: None,
            listed: vec![rat(3, 2)],
        },
        TableRow {
            original: "x^5 - 10x^3 - 20x^2 + 10x + 216",
            principal: IntTrinomial::new(5, 5, 8),
            original_trinomial: None,
            listed: vec![rat(4, 3)],
        },
    ]
}

/// Recomputed t of the principal (and, when available, the original) trinomial.
pub fn recompute_row(row: &TableRow) -> Result<Vec<Rational>, Error> {
    let mut ts = Vec::new();
    for tri in row.original_trinomial.iter().chain([&row.principal]) {
        let (b, c) = tri.monic();
        let t = quintic::trinomial_t(&b, &c)?
            .ok_or_else(|| Error::Verification(format!("{tri}: discriminant not a square")))?;
        ts.push(t);
    }
    Ok(ts)
}

pub fn table_report() -> VerificationReport {
    let mut r = VerificationReport::new("table", &VerifyOptions::default());
    r.options.clear();
    for (k, row) in table_rows().iter().enumerate() {
        let id = format!("row{}", k + 1);
        let res = recompute_row(row).and_then(|ts| {
            let mut family_ok = true;
            for t in &ts {
                let q = quintic::family_quintic(t)?;
                let matches = row
                    .original_trinomial
                    .iter()
                    .chain([&row.principal])
                    .any(|tri| {
                        let (b, c) = tri.monic();
                        quintic::scaling_equivalent((&q.b, &q.c), (&b, &c))
                    });
                family_ok &= matches;
            }
            let ok = ts == row.listed && family_ok;
            let list = |v: &[Rational]| v.iter().map(format_rational).collect::<Vec<_>>().join(", ");
            let w = format!(
                "original {} | principal {} | listed {} | recomputed {} | q_t matches up to scaling: {}",
                row.original,
                row.principal,
                list(&row.listed),
                list(&ts),
                family_ok
            );
            Ok((ok, Some(w)))
        });
        r.push_result(&id, "recomputed t equals the listed parameter", res);
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_matches() {
        let r = table_report();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.checks.len(), 5);
    }

    #[test]
    fn unknown_suite() {
        assert!(run_suite("nope", &VerifyOptions::default()).is_err());
    }

    #[test]
    fn small_suites_pass() {
        let opts = VerifyOptions { samples: 5, ..Default::default() };
        for s in ["repn", "hecke", "localfield"] {
            let r = run_suite(s, &opts).unwrap();
            assert!(r.passed(), "{r:?}");
        }
    }
}
