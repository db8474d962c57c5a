//! The lifting step `(m p^{r-1}, n p^{s-1}) -> (m p^r, n p^s)` and the
//! quantities compared across it.

use num_traits::{One, Zero};

use super::products::g_star;
use super::ValuationCheck;
use crate::arith::{
    binomial_valuation, choose, int_pow, integer_valuation, rational_valuation, to_rational,
    ExactInteger, ExactRational, Prime, Valuation,
};
use crate::error::{Error, Result};
use crate::sequences::DombSpec;

/// One instance of the lift: a prime `p > 3` and indices with
/// `1 <= s <= r` and `n p^s <= m p^r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Lift {
    p: Prime,
    m: u64,
    n: u64,
    r: u32,
    s: u32,
}

impl Lift {
    pub fn new(p: Prime, m: u64, n: u64, r: u32, s: u32) -> Result<Self> {
        p.require_large()?;
        if m == 0 || n == 0 {
            return Err(Error::DegenerateInstance(format!(
                "lift needs m, n >= 1, got m = {m}, n = {n}"
            )));
        }
        if s == 0 || s > r {
            return Err(Error::DegenerateInstance(format!(
                "lift needs 1 <= s <= r, got r = {r}, s = {s}"
            )));
        }
        let lift = Lift { p, m, n, r, s };
        if lift.bottom() > lift.top() {
            return Err(Error::DegenerateInstance(format!(
                "lift needs n p^s <= m p^r, got {} > {}",
                lift.bottom(),
                lift.top()
            )));
        }
        Ok(lift)
    }

    pub fn p(&self) -> Prime {
        self.p
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    /// `m p^r`
    pub fn top(&self) -> u64 {
        self.m * self.p.get().pow(self.r)
    }

    /// `m p^{r-1}`
    pub fn top_below(&self) -> u64 {
        self.m * self.p.get().pow(self.r - 1)
    }

    /// `n p^s`
    pub fn bottom(&self) -> u64 {
        self.n * self.p.get().pow(self.s)
    }

    /// `n p^{s-1}`
    pub fn bottom_below(&self) -> u64 {
        self.n * self.p.get().pow(self.s - 1)
    }

    /// Whether `p` divides neither `m` nor `n`.
    pub fn is_reduced(&self) -> bool {
        !self.m.is_multiple_of(self.p.get()) && !self.n.is_multiple_of(self.p.get())
    }

    fn p_power(&self, e: u32) -> ExactInteger {
        int_pow(self.p.get(), e)
    }
}

/// The two cases of the main theorem, by comparison of `B` and `C`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BcCase {
    /// `B >= C`: the leftover central binomial is `C(2k, k)^{B-C}`.
    BAtLeastC,
    /// `C > B`: the leftover is `C(2(N-k), N-k)^{C-B}`.
    CExceedsB,
}

impl BcCase {
    pub fn of(spec: DombSpec) -> Self {
        if spec.b() >= spec.c() {
            BcCase::BAtLeastC
        } else {
            BcCase::CExceedsB
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            BcCase::BAtLeastC => "b>=c",
            BcCase::CExceedsB => "c>b",
        }
    }
}

/// Exponents of the rewritten summand
/// `C(2N,N)^d C(N,k)^{A+2d} central^{|B-C|} / C(2N,2k)^d`, `d = min(B, C)`.
#[derive(Debug, Clone, Copy)]
struct Shape {
    case: BcCase,
    main: u32,
    central: u32,
    denom: u32,
}

impl Shape {
    fn of(spec: DombSpec) -> Self {
        let denom = spec.b().min(spec.c());
        Shape {
            case: BcCase::of(spec),
            main: spec.a() + 2 * denom,
            central: spec.b().abs_diff(spec.c()),
            denom,
        }
    }

    /// Index `j` of the leftover central binomial `C(2j, j)`.
    fn central_index(&self, top: u64, k: u64) -> u64 {
        match self.case {
            BcCase::BAtLeastC => k,
            BcCase::CExceedsB => top - k,
        }
    }

    fn central(&self, top: u64, k: u64) -> ExactInteger {
        let j = self.central_index(top, k);
        num_traits::pow(choose(2 * j, j), self.central as usize)
    }

    fn central_valuation(&self, top: u64, k: u64, p: Prime) -> i64 {
        let j = self.central_index(top, k);
        self.central as i64 * binomial_valuation(2 * j, j, p).expect("j <= 2j") as i64
    }

    /// `C(N,k)^{A+2d} central^{|B-C|} / C(2N,2k)^d`, without the
    /// `C(2N,N)^d` prefactor.
    fn ratio(&self, top: u64, k: u64) -> ExactRational {
        let numer = num_traits::pow(choose(top, k), self.main as usize) * self.central(top, k);
        let denom = num_traits::pow(choose(2 * top, 2 * k), self.denom as usize);
        ExactRational::new(numer, denom)
    }
}

/// `v_p(g*_AB(m p^r, n p^s) - 1) >= r + 2s`.
pub fn key_congruence_check(
    p: Prime,
    m: u64,
    n: u64,
    r: u32,
    s: u32,
    a: u32,
    b: u32,
) -> Result<ValuationCheck> {
    p.require_large()?;
    if s > r {
        return Err(Error::DegenerateInstance(format!(
            "key congruence needs s <= r, got r = {r}, s = {s}"
        )));
    }
    let x = ExactInteger::from(m) * int_pow(p.get(), r);
    let k = n * p.get().pow(s);
    let g = g_star(a, b, &x, k, p);
    let achieved = rational_valuation(&(g - ExactRational::one()), p);
    Ok(ValuationCheck::new(achieved, i64::from(r + 2 * s)))
}

/// Checks both factorizations
/// `C(N,K)^{A+2C} = C(N/p,K/p)^{A+2C} g*_{(A+2C)0}(N,K)` and
/// `C(2N,2K)^C = C(2N/p,2K/p)^C g*_{C0}(2N,2K)` exactly.
pub fn step_factorization_check(lift: &Lift, spec: DombSpec) -> Result<bool> {
    let p = lift.p();
    let (top, bottom) = (lift.top(), lift.bottom());
    let (top_below, bottom_below) = (lift.top_below(), lift.bottom_below());
    let holds = |e: u32, scale: u64| {
        let lhs = to_rational(num_traits::pow(
            choose(scale * top, scale * bottom),
            e as usize,
        ));
        let below = num_traits::pow(choose(scale * top_below, scale * bottom_below), e as usize);
        let rhs =
            to_rational(below) * g_star(e, 0, &ExactInteger::from(scale * top), scale * bottom, p);
        lhs == rhs
    };
    Ok(holds(spec.a() + 2 * spec.c(), 1) && holds(spec.c(), 2))
}

/// The three correction terms of the lifting argument. Each is expected to
/// be p-integral.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosterWitness {
    pub alpha: ExactRational,
    pub beta: ExactRational,
    pub gamma: ExactRational,
    pub lift: Lift,
    pub spec: DombSpec,
}

impl CosterWitness {
    pub fn valuations(&self) -> [Valuation; 3] {
        let p = self.lift.p();
        [&self.alpha, &self.beta, &self.gamma].map(|w| rational_valuation(w, p))
    }

    pub fn min_valuation(&self) -> Valuation {
        self.valuations()
            .into_iter()
            .min()
            .expect("three witnesses")
    }

    pub fn is_p_integral(&self) -> bool {
        self.min_valuation().at_least(0)
    }

    /// Whether all three are integers, not just p-integral.
    pub fn all_integers(&self) -> bool {
        [&self.alpha, &self.beta, &self.gamma]
            .iter()
            .all(|w| w.is_integer())
    }
}

/// `gamma`, `alpha`, `beta` such that
/// `C(2N',2K')^d = C(2N,2K)^d - gamma p^{r+2s} C(2N',2K')^d`,
/// `central(K)^e = central(K')^e + alpha p^{3s}` and
/// `g*_{(A+2d)0}(N, K) = 1 + beta p^{r+2s}`, where `N' = N/p`, `K' = K/p`.
pub fn coster_witnesses(lift: &Lift, spec: DombSpec) -> Result<CosterWitness> {
    let shape = Shape::of(spec);
    let p = lift.p();
    let (r, s) = (lift.r(), lift.s());
    let (top, bottom) = (lift.top(), lift.bottom());
    let (top_below, bottom_below) = (lift.top_below(), lift.bottom_below());

    let y_top = num_traits::pow(choose(2 * top, 2 * bottom), shape.denom as usize);
    let y_below = num_traits::pow(
        choose(2 * top_below, 2 * bottom_below),
        shape.denom as usize,
    );
    let gamma = ExactRational::new(&y_top - &y_below, lift.p_power(r + 2 * s) * y_below);

    let central_diff = shape.central(top, bottom) - shape.central(top_below, bottom_below);
    let alpha = ExactRational::new(central_diff, lift.p_power(3 * s));

    let g = g_star(shape.main, 0, &ExactInteger::from(top), bottom, p);
    let beta = (g - ExactRational::one()) / to_rational(lift.p_power(r + 2 * s));

    Ok(CosterWitness {
        alpha,
        beta,
        gamma,
        lift: *lift,
        spec,
    })
}

/// Valuations of the seven cross terms produced by substituting the
/// witnesses into the factorized summand, against `3r + d(r - s)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SevenTerms {
    pub terms: [(char, Valuation); 7],
    pub bound: i64,
}

impl SevenTerms {
    pub fn min_valuation(&self) -> Valuation {
        self.terms
            .iter()
            .map(|&(_, v)| v)
            .min()
            .expect("seven terms")
    }

    pub fn holds(&self) -> bool {
        self.min_valuation().at_least(self.bound)
    }
}

pub fn seven_term_valuations(lift: &Lift, spec: DombSpec) -> Result<SevenTerms> {
    let shape = Shape::of(spec);
    let p = lift.p();
    let (r, s) = (i64::from(lift.r()), i64::from(lift.s()));
    let (top, bottom) = (lift.top(), lift.bottom());
    let (top_below, bottom_below) = (lift.top_below(), lift.bottom_below());
    let v = |n: u64, k: u64| binomial_valuation(n, k, p).map(|x| x as i64);

    let main_below = shape.main as i64 * v(top_below, bottom_below)?;
    let central_below = shape.central_valuation(top_below, bottom_below, p);
    let doubled_top = shape.denom as i64 * v(2 * top, 2 * bottom)?;
    let doubled_below = shape.denom as i64 * v(2 * top_below, 2 * bottom_below)?;

    let term = |p_exp: i64, rest: i64| Valuation::Finite(p_exp + rest);
    let terms = [
        (
            'a',
            term(r + 2 * s, main_below + central_below + doubled_below),
        ),
        ('b', term(3 * s, main_below + doubled_top)),
        ('c', term(r + 5 * s, main_below + doubled_below)),
        (
            'd',
            term(r + 2 * s, doubled_top + central_below + main_below),
        ),
        (
            'e',
            term(2 * r + 4 * s, central_below + main_below + doubled_below),
        ),
        ('f', term(r + 5 * s, doubled_top + main_below)),
        ('g', term(2 * r + 7 * s, doubled_below + main_below)),
    ];
    Ok(SevenTerms {
        terms,
        bound: 3 * r + shape.denom as i64 * (r - s),
    })
}

/// The ratio at `(N, K)` is congruent to the ratio at `(N/p, K/p)`
/// modulo `p^{3r}`.
pub fn ratio_congruence_check(lift: &Lift, spec: DombSpec, case: BcCase) -> Result<ValuationCheck> {
    if spec.a() < 2 {
        return Err(Error::HypothesisNotMet(format!(
            "ratio congruence needs A >= 2, got A = {}",
            spec.a()
        )));
    }
    if case != BcCase::of(spec) {
        return Err(Error::HypothesisNotMet(format!(
            "case {} does not match spec {spec}",
            case.as_str()
        )));
    }
    let shape = Shape::of(spec);
    let p = lift.p();
    let upper = shape.ratio(lift.top(), lift.bottom());
    let lower = shape.ratio(lift.top_below(), lift.bottom_below());
    for x in [&upper, &lower] {
        if !rational_valuation(x, p).at_least(0) {
            return Err(Error::NotPIntegral { p: p.get() });
        }
    }
    let achieved = rational_valuation(&(upper - lower), p);
    Ok(ValuationCheck::new(achieved, 3 * i64::from(lift.r())))
}

/// The `k`-th summand of `D(N, A, B, C)` after the binomial product
/// identity: `C(2N,N)^d C(N,k)^{A+2d} central^{|B-C|} / C(2N,2k)^d`.
pub fn rewritten_summand(top: u64, k: u64, spec: DombSpec) -> ExactRational {
    let shape = Shape::of(spec);
    let prefactor = num_traits::pow(choose(2 * top, top), shape.denom as usize);
    to_rational(prefactor) * shape.ratio(top, k)
}

/// Termwise valuations of the rewritten summands with `p` not dividing `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VanishingSum {
    pub term_valuations: Vec<(u64, Valuation)>,
    pub sum_valuation: Valuation,
    pub bound: i64,
}

impl VanishingSum {
    pub fn min_term_valuation(&self) -> Valuation {
        self.term_valuations
            .iter()
            .map(|&(_, v)| v)
            .min()
            .unwrap_or(Valuation::Infinite)
    }

    pub fn holds(&self) -> bool {
        self.min_term_valuation().at_least(self.bound)
    }
}

pub fn vanishing_sum_check(p: Prime, m: u64, r: u32, spec: DombSpec) -> Result<VanishingSum> {
    p.require_large()?;
    if spec.a() < 2 {
        return Err(Error::HypothesisNotMet(format!(
            "vanishing sum needs A >= 2, got A = {}",
            spec.a()
        )));
    }
    if m == 0 || r == 0 {
        return Err(Error::DegenerateInstance(format!(
            "vanishing sum needs m, r >= 1, got m = {m}, r = {r}"
        )));
    }
    let shape = Shape::of(spec);
    let top = m * p.get().pow(r);
    let v = |n: u64, k: u64| binomial_valuation(n, k, p).expect("k <= n") as i64;
    let prefactor = shape.denom as i64 * v(2 * top, top);

    let mut term_valuations = Vec::new();
    let mut sum = ExactRational::zero();
    for k in (0..=top).filter(|k| k % p.get() != 0) {
        let val = prefactor + shape.main as i64 * v(top, k) + shape.central_valuation(top, k, p)
            - shape.denom as i64 * v(2 * top, 2 * k);
        term_valuations.push((k, Valuation::Finite(val)));
        sum += rewritten_summand(top, k, spec);
    }
    let sum_valuation = if sum.is_integer() {
        integer_valuation(&sum.to_integer(), p)
    } else {
        rational_valuation(&sum, p)
    };
    Ok(VanishingSum {
        term_valuations,
        sum_valuation,
        bound: 3 * i64::from(r),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequences::generalized_domb;

    fn p(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    fn spec(a: u32, b: u32, c: u32) -> DombSpec {
        DombSpec::new(a, b, c).unwrap()
    }

    fn lift(pr: u64, m: u64, n: u64, r: u32, s: u32) -> Lift {
        Lift::new(p(pr), m, n, r, s).unwrap()
    }

    #[test]
    fn lift_validation() {
        assert!(Lift::new(p(5), 1, 2, 1, 1).is_err());
        assert!(Lift::new(p(5), 1, 1, 1, 0).is_err());
        assert!(Lift::new(p(5), 1, 1, 1, 2).is_err());
        assert!(matches!(
            Lift::new(p(3), 1, 1, 1, 1),
            Err(Error::SmallPrime(3))
        ));
        let l = lift(7, 2, 3, 2, 1);
        assert_eq!(
            (l.top(), l.top_below(), l.bottom(), l.bottom_below()),
            (98, 14, 21, 3)
        );
    }

    #[test]
    fn key_congruence_examples() {
        let c = key_congruence_check(p(5), 3, 0, 1, 1, 2, 1).unwrap();
        assert_eq!(c.achieved, Valuation::Infinite);
        let c = key_congruence_check(p(5), 1, 1, 1, 1, 3, 0).unwrap();
        assert!(c.holds());
        assert_eq!(c.required.finite(), Some(3));
        let c = key_congruence_check(p(7), 2, 1, 2, 1, 4, 0).unwrap();
        assert!(c.holds());
        assert_eq!(c.required.finite(), Some(4));
    }

    #[test]
    fn step_factorization_examples() {
        assert!(step_factorization_check(&lift(5, 1, 1, 1, 1), DombSpec::DOMB).unwrap());
        assert!(step_factorization_check(&lift(5, 2, 1, 1, 1), DombSpec::DOMB).unwrap());
        assert!(step_factorization_check(&lift(7, 1, 1, 2, 1), spec(3, 2, 2)).unwrap());
    }

    #[test]
    fn witness_examples() {
        // B = C: both central powers are 1
        let w = coster_witnesses(&lift(5, 1, 1, 1, 1), DombSpec::DOMB).unwrap();
        assert!(w.alpha.is_zero());
        assert!(w.is_p_integral());
        // B - C = 1: (C(10,5) - C(2,1)) / 5^3 = 250/125
        let w = coster_witnesses(&lift(5, 1, 1, 1, 1), spec(3, 2, 1)).unwrap();
        assert_eq!(w.alpha, to_rational(2.into()));
        assert!(w.is_p_integral());
        let w = coster_witnesses(&lift(7, 2, 1, 2, 1), spec(3, 2, 2)).unwrap();
        assert!(w.alpha.is_zero());
        assert!(w.is_p_integral());
    }

    #[test]
    fn seven_term_examples() {
        let t = seven_term_valuations(&lift(5, 1, 1, 1, 1), DombSpec::DOMB).unwrap();
        assert_eq!(t.terms[1], ('b', Valuation::Finite(3)));
        assert_eq!(t.bound, 3);
        assert!(t.holds());
        let t = seven_term_valuations(&lift(5, 1, 1, 2, 1), DombSpec::DOMB).unwrap();
        assert_eq!(t.bound, 7);
        assert!(t.holds());
        let t = seven_term_valuations(&lift(7, 1, 1, 2, 2), spec(3, 2, 1)).unwrap();
        assert_eq!(t.bound, 6);
        assert_eq!(t.terms[6].1, Valuation::Finite(4 + 14));
    }

    #[test]
    fn seven_terms_match_exact_valuations() {
        let l = lift(5, 2, 1, 2, 1);
        let s = spec(2, 2, 1);
        let t = seven_term_valuations(&l, s).unwrap();
        let pw = |e: u32| int_pow(5, e);
        let u = num_traits::pow(choose(l.top_below(), l.bottom_below()), 4);
        let c = choose(2 * l.bottom_below(), l.bottom_below());
        let x = choose(2 * l.top(), 2 * l.bottom());
        let y = choose(2 * l.top_below(), 2 * l.bottom_below());
        let exact = [
            pw(4) * &u * &c * &y,
            pw(3) * &u * &x,
            pw(7) * &u * &y,
            pw(4) * &x * &c * &u,
            pw(8) * &c * &u * &y,
            pw(7) * &x * &u,
            pw(11) * &y * &u,
        ];
        for ((label, v), value) in t.terms.iter().zip(exact) {
            assert_eq!(*v, integer_valuation(&value, p(5)), "term {label}");
        }
    }

    #[test]
    fn ratio_examples() {
        let c = ratio_congruence_check(&lift(5, 1, 1, 1, 1), DombSpec::DOMB, BcCase::BAtLeastC)
            .unwrap();
        assert_eq!(c.achieved, Valuation::Infinite);
        let c = ratio_congruence_check(&lift(5, 2, 1, 1, 1), DombSpec::DOMB, BcCase::BAtLeastC)
            .unwrap();
        let direct = ExactRational::new(num_traits::pow(ExactInteger::from(252), 4), 184756.into())
            - ExactRational::new(16.into(), 6.into());
        assert_eq!(c.achieved, rational_valuation(&direct, p(5)));
        assert!(c.holds());
        let c =
            ratio_congruence_check(&lift(5, 2, 1, 1, 1), spec(2, 1, 2), BcCase::CExceedsB).unwrap();
        assert!(c.holds());
    }

    #[test]
    fn ratio_rejects_wrong_case_and_small_a() {
        let l = lift(5, 2, 1, 1, 1);
        assert!(matches!(
            ratio_congruence_check(&l, spec(2, 1, 2), BcCase::BAtLeastC),
            Err(Error::HypothesisNotMet(_))
        ));
        assert!(matches!(
            ratio_congruence_check(&l, spec(1, 1, 1), BcCase::BAtLeastC),
            Err(Error::HypothesisNotMet(_))
        ));
    }

    #[test]
    fn vanishing_examples() {
        let v = vanishing_sum_check(p(5), 1, 1, DombSpec::DOMB).unwrap();
        let ks: Vec<u64> = v.term_valuations.iter().map(|&(k, _)| k).collect();
        assert_eq!(ks, [1, 2, 3, 4]);
        assert!(v.holds());
        assert!(vanishing_sum_check(p(7), 1, 1, spec(3, 2, 1))
            .unwrap()
            .holds());
        assert!(vanishing_sum_check(p(5), 1, 1, spec(2, 1, 2))
            .unwrap()
            .holds());
    }

    #[test]
    fn vanishing_valuations_match_exact_terms() {
        for s in [DombSpec::DOMB, spec(2, 1, 2), spec(3, 2, 1)] {
            let v = vanishing_sum_check(p(5), 2, 1, s).unwrap();
            for &(k, val) in &v.term_valuations {
                assert_eq!(val, rational_valuation(&rewritten_summand(10, k, s), p(5)));
            }
        }
    }

    #[test]
    fn rewritten_summands_reassemble_the_sum() {
        for s in [DombSpec::DOMB, spec(2, 1, 2), spec(3, 2, 2), spec(1, 3, 1)] {
            for n in 0..25 {
                let total: ExactRational = (0..=n).map(|k| rewritten_summand(n, k, s)).sum();
                assert_eq!(total, to_rational(generalized_domb(n, s)));
            }
        }
    }
}
