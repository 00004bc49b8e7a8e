//! Seeded property suites with deterministic JSON reports.
//!
//! Every check group draws from its own generator, derived from the suite
//! seed, so groups can be run alone and still reproduce the cases they
//! contribute to a full suite. Reports carry no timing.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use rand::Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exact::{QuadScalar, RatFun1};
use crate::laurent::{ExpVec, LaurentPoly, WeightVector};
use crate::order::{IntMatrix, OrderMatrix};
use crate::rings::random::{random_laurent_v, random_r, random_v, random_v_maximal, random_w, seeded};
use crate::rings::{w_divides, w_value, BaseField, FracElem, RElem, VElem};
use crate::scalar::{rat, Domain, Scalar};
use crate::witness::{
    homogeneous_relation_search, homogenize_witness, independence_search, lex_witness_pair, overring_lex_witness,
    phi_refutation_check, tdim_witness, vdim_witness, verify_witness, witness_w_preorder, OverringElement,
    ValuationOracle, VdimOracle, Witness, WitnessKind,
};

/// Constructed vanishing polynomials per refutation check.
pub const PHI_CASES: usize = 50;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SuiteName {
    PR,
    PW,
    PV,
    LPrelim,
    TDim,
    TVdimA,
    TVdimB,
    CAnalytic,
}

impl SuiteName {
    pub const ALL: [SuiteName; 8] = [
        SuiteName::PR,
        SuiteName::PW,
        SuiteName::PV,
        SuiteName::LPrelim,
        SuiteName::TDim,
        SuiteName::TVdimA,
        SuiteName::TVdimB,
        SuiteName::CAnalytic,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SuiteName::PR => "pR",
            SuiteName::PW => "pW",
            SuiteName::PV => "pV",
            SuiteName::LPrelim => "lPrelim",
            SuiteName::TDim => "tDim",
            SuiteName::TVdimA => "tVdimA",
            SuiteName::TVdimB => "tVdimB",
            SuiteName::CAnalytic => "cAnalytic",
        }
    }
}

impl fmt::Display for SuiteName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SuiteName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SuiteName::ALL
            .into_iter()
            .find(|n| n.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::Parse {
                pos: 0,
                expected: "one of pR, pW, pV, lPrelim, tDim, tVdimA, tVdimB, cAnalytic".into(),
            })
    }
}

impl Serialize for SuiteName {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

/// A witness in the text formats accepted by the parsers.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct WitnessText {
    pub poly: String,
    pub order: String,
    pub elements: Vec<String>,
    pub kind: WitnessKind,
}

impl<T: Domain> From<&Witness<T>> for WitnessText {
    fn from(w: &Witness<T>) -> Self {
        WitnessText {
            poly: w.poly.to_string(),
            order: w.order.to_string(),
            elements: texts(&w.elements),
            kind: w.kind,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct Case {
    pub index: usize,
    pub check: &'static str,
    pub inputs: Value,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub witnesses: Vec<WitnessText>,
    /// A homogeneous relation, for the analytic checks.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub relation: Option<String>,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

impl Case {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

#[derive(Clone, Default, PartialEq, Eq, Debug, Serialize)]
pub struct Tally {
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub checks: BTreeMap<&'static str, Tally>,
}

impl Summary {
    pub fn of(cases: &[Case]) -> Self {
        let mut checks: BTreeMap<&'static str, Tally> = BTreeMap::new();
        for c in cases {
            let t = checks.entry(c.check).or_default();
            if c.passed() {
                t.passed += 1;
            } else {
                t.failed += 1;
            }
        }
        let passed = cases.iter().filter(|c| c.passed()).count();
        Summary { total: cases.len(), passed, failed: cases.len() - passed, checks }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct SuiteCommand {
    pub verb: &'static str,
    pub name: SuiteName,
    pub seed: u64,
    pub scale: usize,
}

#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct Report {
    pub command: SuiteCommand,
    pub seed: u64,
    pub cases: Vec<Case>,
    pub summary: Summary,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

fn texts<T: fmt::Display>(xs: &[T]) -> Vec<String> {
    xs.iter().map(ToString::to_string).collect()
}

/// One case outcome before indexing.
struct Outcome {
    witnesses: Vec<WitnessText>,
    relation: Option<String>,
}

impl Outcome {
    fn witnesses(witnesses: Vec<WitnessText>) -> Self {
        Outcome { witnesses, relation: None }
    }

    fn empty() -> Self {
        Outcome { witnesses: Vec::new(), relation: None }
    }
}

fn case(check: &'static str, inputs: Value, outcome: Result<Outcome>) -> Case {
    let (verdict, reason, outcome) = match outcome {
        Ok(o) => (Verdict::Pass, None, o),
        Err(e) => (Verdict::Fail, Some(e.to_string()), Outcome::empty()),
    };
    Case { index: 0, check, inputs, witnesses: outcome.witnesses, relation: outcome.relation, verdict, reason }
}

fn verified<T: Domain>(w: &Witness<T>) -> Result<WitnessText> {
    let v = verify_witness(w);
    match v.reason {
        None => Ok(w.into()),
        Some(reason) => Err(Error::Unverified(format!("{w}: {reason}"))),
    }
}

fn ensure(ok: bool, reason: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Unverified(reason()))
    }
}

fn group_rng(seed: u64, group: u64) -> rand_chacha::ChaCha8Rng {
    seeded(seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(group))
}

fn matrix(rows: &[&[i64]]) -> OrderMatrix {
    OrderMatrix::from_ints(rows).expect("valid literal matrix")
}

fn v_pow(alpha: QuadScalar) -> VElem {
    VElem::v_pow(alpha)
}

fn half() -> QuadScalar {
    QuadScalar::from_rational(rat(1, 2))
}

fn signed<T: Domain>(xs: &[T]) -> Vec<T> {
    let mut pool = vec![T::zero()];
    for x in xs {
        pool.push(x.clone());
        pool.push(-x.clone());
    }
    pool
}

/// The elements `v`, `u·v` of `R`.
pub fn r_independent_pair() -> [RElem; 2] {
    let v = RElem::v_pow(QuadScalar::one());
    let uv = &RElem::constant(RatFun1::u()) * &v;
    [v, uv]
}

/// `{0, ±1, ±v, ±u·v}`.
pub fn r_pool() -> Vec<RElem> {
    let [v, uv] = r_independent_pair();
    signed(&[RElem::one(), v, uv])
}

/// The elements `v`, `v^√2` of `V`.
pub fn v_independent_pair() -> [VElem; 2] {
    [v_pow(QuadScalar::one()), v_pow(QuadScalar::sqrt2())]
}

/// `{0, ±1, ±v^(1/2), ±v, ±v^√2}`.
pub fn v_pool() -> Vec<VElem> {
    signed(&[VElem::one(), v_pow(half()), v_pow(QuadScalar::one()), v_pow(QuadScalar::sqrt2())])
}

/// A random integer matrix of full rank `n` with entries in `-3..=3`.
fn random_full_rank<G: Rng>(rng: &mut G, n: usize) -> IntMatrix {
    loop {
        let rows: Vec<Vec<i64>> = (0..n).map(|_| (0..n).map(|_| rng.gen_range(-3..=3)).collect()).collect();
        let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
        let m = IntMatrix::from_i64(&refs).expect("rectangular");
        if m.to_order_matrix().rank() == n {
            return m;
        }
    }
}

/// `lc(P, M) = lc(φ_M(P), lex)` for random `P` over `V` and `M` of full rank.
pub fn lprelim_identity(seed: u64, scale: usize) -> Vec<Case> {
    let mut rng = group_rng(seed, 1);
    (0..scale)
        .map(|_| {
            let n = rng.gen_range(2..=3);
            let m = random_full_rank(&mut rng, n);
            let p = random_laurent_v(&mut rng, n, 6);
            let om = m.to_order_matrix();
            let inputs = json!({ "ring": "V", "matrix": om.to_string(), "poly": p.to_string() });
            let outcome = (|| {
                let lhs = p.leading_coefficient(&om)?;
                let rhs = p.apply_monomial_map(&m)?.leading_coefficient(&OrderMatrix::lex(n))?;
                ensure(lhs == rhs, || format!("lc under M is {lhs}, lex lc of the image is {rhs}"))?;
                Ok(Outcome::empty())
            })();
            case("lprelim-identity", inputs, outcome)
        })
        .collect()
}

/// Lex witnesses for random pairs of `R`, both variable orders.
pub fn r_pair_witnesses(seed: u64, scale: usize) -> Vec<Case> {
    let mut rng = group_rng(seed, 2);
    (0..scale)
        .map(|_| {
            let (a, b) = (random_r(&mut rng), random_r(&mut rng));
            let inputs = json!({ "ring": "R", "elements": [a.to_string(), b.to_string()] });
            let outcome = [true, false]
                .into_iter()
                .map(|x_greater| verified(&lex_witness_pair(&a, &b, x_greater)?))
                .collect::<Result<Vec<_>>>()
                .map(Outcome::witnesses);
            case("r-pair-witness", inputs, outcome)
        })
        .collect()
}

/// No witness for `(v, u·v)` under `(1,1)` in the bounded family.
pub fn r_refutation() -> Case {
    let elements = r_independent_pair();
    let m = matrix(&[&[1, 1]]);
    let pool = r_pool();
    let inputs = json!({
        "ring": "R",
        "matrix": m.to_string(),
        "elements": texts(&elements),
        "max_degree": 2,
        "pool": texts(&pool),
    });
    let outcome = independence_search(&elements, &m, 2, &pool).and_then(|found| match found {
        None => Ok(Outcome::empty()),
        Some(w) => Err(Error::Unverified(format!("search found {}", w.poly))),
    });
    case("r-refutation", inputs, outcome)
}

/// A nonzero polynomial vanishing at `elements`: a binomial
/// `c₁X^{m₁} − c₂X^{m₂}` with `m₂` of smaller weight, sometimes times a
/// random binomial.
fn vanishing_poly<K: BaseField, G: Rng>(
    rng: &mut G,
    elements: &[FracElem<K>],
    weights: &WeightVector,
    coeff: &mut impl FnMut(&mut G) -> FracElem<K>,
) -> Result<LaurentPoly<FracElem<K>>> {
    let n = elements.len();
    let exp = |rng: &mut G| ExpVec::from_i64(&(0..n).map(|_| rng.gen_range(0..=2)).collect::<Vec<_>>());
    let (m1, m2) = loop {
        let (m1, m2) = (exp(rng), exp(rng));
        if weights.degree(&m1) > weights.degree(&m2) {
            break (m1, m2);
        }
    };
    let c1 = coeff(rng);
    let at = |e: &ExpVec| LaurentPoly::monomial(FracElem::one(), e.clone()).evaluate(elements);
    let c2 = c1.clone() * at(&m1)? * at(&m2)?.inv().ok_or(Error::ZeroInput("element"))?;
    let p = LaurentPoly::from_terms(n, [(m1, c1), (m2, -c2)])?;
    if !rng.gen_bool(0.5) {
        return Ok(p);
    }
    let q = LaurentPoly::from_terms(n, [(exp(rng), coeff(rng)), (exp(rng), coeff(rng))])?;
    if q.is_zero() {
        return Ok(p);
    }
    Ok(&p * &q)
}

fn phi_cases<K: BaseField, G: Rng>(
    check: &'static str,
    ring: &'static str,
    rng: &mut G,
    count: usize,
    elements: &[FracElem<K>],
    weights: &WeightVector,
    mut coeff: impl FnMut(&mut G) -> FracElem<K>,
) -> Vec<Case>
where
    FracElem<K>: Domain,
{
    (0..count)
        .map(|_| {
            let p = vanishing_poly(rng, elements, weights, &mut coeff);
            let inputs = json!({
                "ring": ring,
                "elements": texts(elements),
                "poly": p.as_ref().map(ToString::to_string).unwrap_or_default(),
            });
            let outcome = p.and_then(|p| {
                ensure(p.coefficients_in_ring(), || format!("{p} has coefficients outside {ring}"))?;
                ensure(phi_refutation_check(&p, elements, weights)?, || {
                    format!("the lowest component of {p} has a coefficient with nonzero constant part")
                })?;
                Ok(Outcome::empty())
            });
            case(check, inputs, outcome)
        })
        .collect()
}

/// The constant-coefficient argument on vanishing polynomials at `(v, u·v)`.
pub fn r_phi_checks(seed: u64, count: usize) -> Vec<Case> {
    let mut rng = group_rng(seed, 3);
    let weights = WeightVector::new(vec![QuadScalar::one(), QuadScalar::one()]).unwrap();
    phi_cases("r-phi", "R", &mut rng, count, &r_independent_pair(), &weights, random_r)
}

/// Divisibility totality and additivity of the value on random pairs of `W`.
pub fn w_totality(seed: u64, scale: usize) -> Vec<Case> {
    let mut rng = group_rng(seed, 4);
    (0..scale)
        .map(|_| {
            let (a, b) = (random_w(&mut rng), random_w(&mut rng));
            let inputs = json!({ "ring": "W", "elements": [a.to_string(), b.to_string()] });
            let outcome = (|| {
                let (x, y) = (a.value(), b.value());
                ensure(w_divides(x, y)? || w_divides(y, x)?, || "neither divides the other".into())?;
                let (va, vb) = (w_value(x), w_value(y));
                let vab = w_value(&(x * y));
                let sum = va.zip(vb).map(|(p, q)| (p.0 + q.0, p.1 + q.1));
                ensure(sum.is_some() && vab == sum, || format!("w(ab) = {vab:?}, w(a) + w(b) = {sum:?}"))?;
                Ok(Outcome::empty())
            })();
            case("w-totality", inputs, outcome)
        })
        .collect()
}

/// The order rows of the preorder checks in `W`.
pub fn w_matrices() -> Vec<OrderMatrix> {
    vec![
        matrix(&[&[1, 1]]),
        OrderMatrix::new(vec![vec![QuadScalar::one(), QuadScalar::sqrt2()]]).unwrap(),
        matrix(&[&[2, 1]]),
        matrix(&[&[1, 1], &[2, 2]]),
    ]
}

/// Preorder witnesses in `W` for each matrix of [`w_matrices`].
pub fn w_preorder_witnesses(seed: u64, scale: usize) -> Vec<Case> {
    let mut rng = group_rng(seed, 5);
    let mut cases = Vec::new();
    for m in w_matrices() {
        for _ in 0..scale {
            let (a, b) = (random_w(&mut rng), random_w(&mut rng));
            let inputs = json!({ "ring": "W", "matrix": m.to_string(), "elements": [a.to_string(), b.to_string()] });
            let outcome = witness_w_preorder(&m, &a, &b).and_then(|w| {
                ensure(w.kind == WitnessKind::PreorderWitness, || "not a preorder witness".into())?;
                Ok(Outcome::witnesses(vec![verified(&w)?]))
            });
            cases.push(case("w-preorder-witness", inputs, outcome));
        }
    }
    cases
}

/// The total order of the transport checks.
pub fn tdim_matrix() -> OrderMatrix {
    matrix(&[&[1, 1], &[1, 0]])
}

/// Lex witnesses for random pairs of `V` in both variable orders, plus the
/// transported witness under [`tdim_matrix`].
pub fn v_pair_witnesses(seed: u64, scale: usize) -> Vec<Case> {
    let mut rng = group_rng(seed, 6);
    let m = tdim_matrix();
    let oracle = VdimOracle(ValuationOracle);
    (0..scale)
        .map(|_| {
            let pair = [random_v(&mut rng), random_v(&mut rng)];
            let inputs = json!({ "ring": "V", "matrix": m.to_string(), "elements": texts(&pair) });
            let outcome = (|| {
                let mut ws = Vec::new();
                for x_greater in [true, false] {
                    ws.push(verified(&lex_witness_pair(&pair[0], &pair[1], x_greater)?)?);
                }
                ws.push(verified(&tdim_witness(&m, &pair, &oracle)?)?);
                Ok(Outcome::witnesses(ws))
            })();
            case("v-pair-witness", inputs, outcome)
        })
        .collect()
}

/// No witness for `(v, v^√2)` under `(1, √2)` in the bounded family.
pub fn v_refutation() -> Case {
    let elements = v_independent_pair();
    let m = OrderMatrix::new(vec![vec![QuadScalar::one(), QuadScalar::sqrt2()]]).unwrap();
    let pool = v_pool();
    let inputs = json!({
        "ring": "V",
        "matrix": m.to_string(),
        "elements": texts(&elements),
        "max_degree": 3,
        "pool": texts(&pool),
    });
    let outcome = independence_search(&elements, &m, 3, &pool).and_then(|found| match found {
        None => Ok(Outcome::empty()),
        Some(w) => Err(Error::Unverified(format!("search found {}", w.poly))),
    });
    case("v-refutation", inputs, outcome)
}

/// The constant-coefficient argument on vanishing polynomials at `(v, v^√2)`.
pub fn v_phi_checks(seed: u64, count: usize) -> Vec<Case> {
    let mut rng = group_rng(seed, 7);
    let weights = WeightVector::new(vec![QuadScalar::one(), QuadScalar::sqrt2()]).unwrap();
    phi_cases("v-phi", "V", &mut rng, count, &v_independent_pair(), &weights, random_v)
}

/// The total orders of the transport composition checks.
pub fn tdim_matrices() -> Vec<OrderMatrix> {
    vec![
        tdim_matrix(),
        matrix(&[&[2, 1], &[1, 1]]),
        matrix(&[&[1, 0], &[0, 1]]),
        matrix(&[&[1, 1, 1], &[1, 1, 0], &[1, 0, 0]]),
    ]
}

/// Transport composition: lex witnesses for random tuples of `V` through
/// witnesses for their power products.
pub fn tdim_compositions(seed: u64, scale: usize) -> Vec<Case> {
    let mut rng = group_rng(seed, 8);
    let oracle = VdimOracle(ValuationOracle);
    let mut cases = Vec::new();
    for m in tdim_matrices() {
        for _ in 0..scale {
            let a: Vec<VElem> = (0..m.cols()).map(|_| random_v(&mut rng)).collect();
            let inputs = json!({ "ring": "V", "matrix": m.to_string(), "elements": texts(&a) });
            let outcome = tdim_witness(&m, &a, &oracle).and_then(|w| {
                ensure(w.order.is_lex(), || format!("{} is not lex", w.order))?;
                Ok(Outcome::witnesses(vec![verified(&w)?]))
            });
            cases.push(case("tdim-composition", inputs, outcome));
        }
    }
    cases
}

/// The preorders of the valuative-dimension pipeline checks.
pub fn vdim_matrices() -> Vec<OrderMatrix> {
    vec![OrderMatrix::lex(2), tdim_matrix(), matrix(&[&[2, 1], &[1, 1]]), matrix(&[&[1, 1]])]
}

/// Witnesses from the valuative-dimension pipeline, verified under the
/// refined order and as preorder witnesses under the input matrix.
pub fn vdim_pipeline(seed: u64, scale: usize) -> Vec<Case> {
    let mut rng = group_rng(seed, 9);
    let mut cases = Vec::new();
    for m in vdim_matrices() {
        for _ in 0..scale {
            let a = [random_v(&mut rng), random_v(&mut rng)];
            let inputs = json!({ "ring": "V", "matrix": m.to_string(), "elements": texts(&a) });
            let outcome = vdim_witness(&m, &a, &ValuationOracle).and_then(|out| {
                let w = verified(&out.witness)?;
                let pre = verified(&out.witness.reinterpret(m.clone(), WitnessKind::PreorderWitness))?;
                Ok(Outcome::witnesses(vec![w, pre]))
            });
            cases.push(case("vdim-pipeline", inputs, outcome));
        }
    }
    cases
}

/// Lex witnesses for random quotients of `V` through the overring pipeline.
pub fn overring_pipeline(seed: u64, scale: usize) -> Vec<Case> {
    let mut rng = group_rng(seed, 10);
    let m = tdim_matrix();
    let oracle = VdimOracle(ValuationOracle);
    (0..scale)
        .map(|_| {
            let d1 = random_v(&mut rng);
            let d2 = if rng.gen_bool(0.5) { d1.clone() } else { random_v(&mut rng) };
            let parts = [(random_v(&mut rng), d1), (random_v(&mut rng), d2)];
            let b: Vec<OverringElement<VElem>> = parts
                .iter()
                .map(|(n, d)| OverringElement::new(n.clone(), d.clone()))
                .collect::<Result<_>>()
                .expect("random elements are nonzero members");
            let a = crate::witness::common_denominator(&b);
            let inputs = json!({
                "ring": "V",
                "matrix": m.to_string(),
                "quotients": parts.iter().map(|(n, d)| [n.to_string(), d.to_string()]).collect::<Vec<_>>(),
                "common_denominator": a.to_string(),
            });
            let outcome = overring_lex_witness(&m, &oracle, &b).and_then(|w| {
                ensure(w.order.is_lex(), || format!("{} is not lex", w.order))?;
                Ok(Outcome::witnesses(vec![verified(&w)?]))
            });
            case("overring-pipeline", inputs, outcome)
        })
        .collect()
}

/// Homogeneous relations with a unit coefficient for random maximal-ideal
/// pairs of `V`.
pub fn analytic_homogenize(seed: u64, scale: usize) -> Vec<Case> {
    let mut rng = group_rng(seed, 11);
    let m = matrix(&[&[1, 1]]);
    (0..scale)
        .map(|_| {
            let a = [random_v_maximal(&mut rng), random_v_maximal(&mut rng)];
            let inputs = json!({ "ring": "V", "matrix": m.to_string(), "elements": texts(&a) });
            let outcome = (|| {
                let w = vdim_witness(&m, &a, &ValuationOracle)?.witness;
                let pre = w.reinterpret(m.clone(), WitnessKind::PreorderWitness);
                let text = verified(&pre)?;
                let h = homogenize_witness(&pre)?;
                ensure(h.poly.evaluate(&a)?.is_zero(), || format!("{} does not vanish", h.poly))?;
                let homogeneous = h.poly.terms().all(|(e, _)| e.total_degree() == h.degree && e.is_nonnegative());
                ensure(homogeneous, || format!("{} is not homogeneous", h.poly))?;
                let unit = h.poly.coeff(&h.t0).is_some_and(Domain::is_unit);
                ensure(unit, || format!("coefficient of {} in {} is not a unit", h.t0, h.poly))?;
                Ok(Outcome { witnesses: vec![text], relation: Some(h.poly.to_string()) })
            })();
            case("analytic-homogenize", inputs, outcome)
        })
        .collect()
}

/// No homogeneous relation with a unit coefficient for `(v, u·v)` in `R`
/// within the bounds of [`r_refutation`].
pub fn analytic_r_independence() -> Case {
    let elements = r_independent_pair();
    let pool = r_pool();
    let inputs = json!({ "ring": "R", "elements": texts(&elements), "max_degree": 2, "pool": texts(&pool) });
    let outcome = homogeneous_relation_search(&elements, 2, &pool).and_then(|found| match found {
        None => Ok(Outcome::empty()),
        Some(p) => Err(Error::Unverified(format!("search found {p}"))),
    });
    case("analytic-r-independence", inputs, outcome)
}

/// Runs a suite; `scale` is the number of random cases per check group and
/// matrix. The fixed refutation cases are included whenever `scale > 0`.
pub fn run_suite(name: SuiteName, seed: u64, scale: usize) -> Report {
    let fixed = scale > 0;
    let phi = scale.min(PHI_CASES);
    let mut cases = match name {
        SuiteName::LPrelim => lprelim_identity(seed, scale),
        SuiteName::PR => {
            let mut cases = r_pair_witnesses(seed, scale);
            cases.extend(fixed.then(r_refutation));
            cases.extend(r_phi_checks(seed, phi));
            cases
        }
        SuiteName::PW => {
            let mut cases = w_totality(seed, scale);
            cases.extend(w_preorder_witnesses(seed, scale));
            cases
        }
        SuiteName::PV => {
            let mut cases = v_pair_witnesses(seed, scale);
            cases.extend(fixed.then(v_refutation));
            cases.extend(v_phi_checks(seed, phi));
            cases
        }
        SuiteName::TDim => tdim_compositions(seed, scale),
        SuiteName::TVdimA => vdim_pipeline(seed, scale),
        SuiteName::TVdimB => overring_pipeline(seed, scale),
        SuiteName::CAnalytic => {
            let mut cases = analytic_homogenize(seed, scale);
            cases.extend(fixed.then(analytic_r_independence));
            cases
        }
    };
    for (i, c) in cases.iter_mut().enumerate() {
        c.index = i;
    }
    let summary = Summary::of(&cases);
    Report { command: SuiteCommand { verb: "suite", name, seed, scale }, seed, cases, summary }
}
