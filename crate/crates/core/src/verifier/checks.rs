use std::time::Instant;

use super::{Claim, CongruenceReport, CongruenceTask};
use crate::arith::{integer_valuation, Prime};
use crate::coster::{
    check_prop21_i_ii, coster_witnesses, key_congruence_check, ratio_congruence_check,
    seven_term_valuations, step_factorization_check, vanishing_sum_check, BcCase, Lift,
    ValuationCheck,
};
use crate::error::{Error, Result};
use crate::sequences::{apery, central_binomial, generalized_domb, DombSpec};

fn timed(
    task: CongruenceTask,
    check: impl FnOnce() -> Result<(ValuationCheck, Option<String>)>,
) -> Result<CongruenceReport> {
    let start = Instant::now();
    let (outcome, detail) = check()?;
    Ok(CongruenceReport {
        task,
        holds: outcome.holds(),
        difference_valuation: outcome.achieved,
        required_valuation: outcome.required,
        elapsed_milliseconds: start.elapsed().as_secs_f64() * 1e3,
        detail,
    })
}

fn positive(name: &str, value: u64) -> Result<()> {
    if value == 0 {
        return Err(Error::DegenerateInstance(format!("{name} must be >= 1")));
    }
    Ok(())
}

fn field<T>(value: Option<T>, name: &str, task: &CongruenceTask) -> Result<T> {
    value.ok_or_else(|| Error::InvalidConfig(format!("task {task} is missing {name}")))
}

/// `v_p(D(m p^r) - D(m p^{r-1}))` against `3r`.
pub fn verify_theorem_main(p: Prime, m: u64, r: u32, spec: DombSpec) -> Result<CongruenceReport> {
    if spec.a() < 2 {
        return Err(Error::HypothesisNotMet(format!(
            "the main congruence needs A >= 2, got A = {}",
            spec.a()
        )));
    }
    lifted_domb(CongruenceTask::theorem(p, m, r, spec), 3)
}

/// `v_p(D(m p^r, 1, 1, 1) - D(m p^{r-1}, 1, 1, 1))` against `2r`.
pub fn verify_weak_zagier(p: Prime, m: u64, r: u32) -> Result<CongruenceReport> {
    lifted_domb(CongruenceTask::weak_zagier(p, m, r), 2)
}

fn lifted_domb(task: CongruenceTask, per_r: i64) -> Result<CongruenceReport> {
    let (p, m, r, spec) = (task.p, task.m.unwrap_or(0), task.r.unwrap_or(0), task.spec);
    let spec = field(spec, "spec", &task)?;
    p.require_large()?;
    positive("m", m)?;
    positive("r", u64::from(r))?;
    timed(task, || {
        let upper = m * p.get().pow(r);
        let lower = upper / p.get();
        let diff = generalized_domb(upper, spec) - generalized_domb(lower, spec);
        Ok((
            ValuationCheck::new(integer_valuation(&diff, p), per_r * i64::from(r)),
            None,
        ))
    })
}

/// Gessel's congruence `A(n p) = A(n) mod p^3`, as `v_p(A(n p) - A(n))`
/// against `3`.
pub fn verify_gessel(p: Prime, n: u64) -> Result<CongruenceReport> {
    p.require_large()?;
    positive("n", n)?;
    timed(CongruenceTask::gessel(p, n), || {
        let diff = apery(n * p.get()) - apery(n);
        Ok((ValuationCheck::new(integer_valuation(&diff, p), 3), None))
    })
}

/// `v_p(C(2m p^r, m p^r) - C(2m p^{r-1}, m p^{r-1}))` against `3r`.
pub fn verify_central_binomial(p: Prime, m: u64, r: u32) -> Result<CongruenceReport> {
    p.require_large()?;
    positive("m", m)?;
    positive("r", u64::from(r))?;
    timed(CongruenceTask::central(p, m, r), || {
        let upper = m * p.get().pow(r);
        let diff = central_binomial(upper) - central_binomial(upper / p.get());
        Ok((
            ValuationCheck::new(integer_valuation(&diff, p), 3 * i64::from(r)),
            None,
        ))
    })
}

/// Dispatches a task to the checker for its claim.
pub fn run_task(task: &CongruenceTask) -> Result<CongruenceReport> {
    let task = *task;
    let p = task.p;
    match task.claim {
        Claim::TheoremMain => verify_theorem_main(
            p,
            field(task.m, "m", &task)?,
            field(task.r, "r", &task)?,
            field(task.spec, "spec", &task)?,
        ),
        Claim::WeakZagier => {
            verify_weak_zagier(p, field(task.m, "m", &task)?, field(task.r, "r", &task)?)
        }
        Claim::Gessel => verify_gessel(p, field(task.n, "n", &task)?),
        Claim::CentralBinomial => {
            verify_central_binomial(p, field(task.m, "m", &task)?, field(task.r, "r", &task)?)
        }
        Claim::KeyCongruence => {
            let (m, n, r, s) = lift_fields(&task)?;
            let spec = field(task.spec, "spec", &task)?;
            timed(task, || {
                let main = key_congruence_check(p, m, n, r, s, spec.a() + 2 * spec.c(), 0)?;
                let doubled = key_congruence_check(p, 2 * m, 2 * n, r, s, spec.c(), 0)?;
                let detail = format!(
                    "v(g*_(A+2C)0 - 1) = {}, v(g*_C0 - 1) = {}",
                    main.achieved, doubled.achieved
                );
                Ok((
                    ValuationCheck {
                        achieved: main.achieved.min(doubled.achieved),
                        required: main.required,
                    },
                    Some(detail),
                ))
            })
        }
        Claim::StepFactorization => {
            let (lift, spec) = lift_of(&task)?;
            timed(task, || {
                Ok((
                    ValuationCheck::exact(step_factorization_check(&lift, spec)?),
                    None,
                ))
            })
        }
        Claim::RatioCongruence => {
            let (lift, spec) = lift_of(&task)?;
            timed(task, || {
                let case = BcCase::of(spec);
                let check = ratio_congruence_check(&lift, spec, case)?;
                Ok((check, Some(format!("case {}", case.as_str()))))
            })
        }
        Claim::Witnesses => {
            let (lift, spec) = lift_of(&task)?;
            timed(task, || {
                let w = coster_witnesses(&lift, spec)?;
                let [va, vb, vg] = w.valuations();
                let detail = format!(
                    "v(alpha) = {va}, v(beta) = {vb}, v(gamma) = {vg}, all integers: {}",
                    w.all_integers()
                );
                Ok((ValuationCheck::new(w.min_valuation(), 0), Some(detail)))
            })
        }
        Claim::SevenTerms => {
            let (lift, spec) = lift_of(&task)?;
            timed(task, || {
                let terms = seven_term_valuations(&lift, spec)?;
                let detail = terms
                    .terms
                    .iter()
                    .map(|(label, v)| format!("{label}:{v}"))
                    .collect::<Vec<_>>()
                    .join(" ");
                Ok((
                    ValuationCheck::new(terms.min_valuation(), terms.bound),
                    Some(detail),
                ))
            })
        }
        Claim::VanishingSum => {
            let (m, r) = (field(task.m, "m", &task)?, field(task.r, "r", &task)?);
            let spec = field(task.spec, "spec", &task)?;
            timed(task, || {
                let sum = vanishing_sum_check(p, m, r, spec)?;
                let detail = format!(
                    "{} terms, full sum valuation {}",
                    sum.term_valuations.len(),
                    sum.sum_valuation
                );
                Ok((
                    ValuationCheck::new(sum.min_term_valuation(), sum.bound),
                    Some(detail),
                ))
            })
        }
        Claim::Prop21 => {
            let (m, r, j) = (
                field(task.m, "m", &task)?,
                field(task.r, "r", &task)?,
                field(task.j, "j", &task)?,
            );
            timed(task, || Ok((check_prop21_i_ii(p, m, r, j)?, None)))
        }
    }
}

fn lift_fields(task: &CongruenceTask) -> Result<(u64, u64, u32, u32)> {
    Ok((
        field(task.m, "m", task)?,
        field(task.n, "n", task)?,
        field(task.r, "r", task)?,
        field(task.s, "s", task)?,
    ))
}

fn lift_of(task: &CongruenceTask) -> Result<(Lift, DombSpec)> {
    let (m, n, r, s) = lift_fields(task)?;
    Ok((
        Lift::new(task.p, m, n, r, s)?,
        field(task.spec, "spec", task)?,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Valuation;

    fn p(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    #[test]
    fn theorem_smallest_case() {
        let report = verify_theorem_main(p(5), 1, 1, DombSpec::DOMB).unwrap();
        assert!(report.holds);
        assert_eq!(report.difference_valuation, Valuation::Finite(3));
        assert_eq!(report.required_valuation, Valuation::Finite(3));
    }

    #[test]
    fn theorem_second_level() {
        let report = verify_theorem_main(p(5), 1, 2, DombSpec::DOMB).unwrap();
        assert!(report.holds);
        assert!(report.difference_valuation.at_least(6));
    }

    #[test]
    fn theorem_rejects_small_a() {
        assert!(matches!(
            verify_theorem_main(p(5), 1, 1, DombSpec::ZAGIER_E),
            Err(Error::HypothesisNotMet(_))
        ));
        assert!(matches!(
            verify_theorem_main(Prime::new(3).unwrap(), 1, 1, DombSpec::DOMB),
            Err(Error::SmallPrime(3))
        ));
    }

    #[test]
    fn weak_zagier_examples() {
        for (pr, m, r) in [(5, 1, 1), (7, 1, 1), (5, 1, 2)] {
            let report = verify_weak_zagier(p(pr), m, r).unwrap();
            assert!(report.holds, "{}", report.task);
            assert_eq!(report.required_valuation, Valuation::Finite(2 * r as i64));
        }
    }

    #[test]
    fn gessel_examples() {
        // A(5) - A(1) = 819000 = 2^3 3^2 5^3 7 13
        let first = verify_gessel(p(5), 1).unwrap();
        assert_eq!(first.difference_valuation, Valuation::Finite(3));
        assert!(first.holds);
        assert!(verify_gessel(p(5), 2).unwrap().holds);
        assert!(verify_gessel(p(7), 3).unwrap().holds);
    }

    #[test]
    fn central_examples() {
        let r = verify_central_binomial(p(5), 1, 1).unwrap();
        assert_eq!(r.difference_valuation, Valuation::Finite(3));
        let r = verify_central_binomial(p(7), 1, 1).unwrap();
        assert_eq!(r.difference_valuation, Valuation::Finite(3));
        assert!(verify_central_binomial(p(5), 1, 2).unwrap().holds);
    }

    #[test]
    fn dispatch_reports_are_consistent() {
        let spec = DombSpec::new(3, 1, 2).unwrap();
        let tasks = [
            CongruenceTask::lift(Claim::KeyCongruence, p(7), 2, 1, 2, 1, spec),
            CongruenceTask::lift(Claim::StepFactorization, p(7), 2, 1, 2, 1, spec),
            CongruenceTask::lift(Claim::RatioCongruence, p(7), 2, 1, 2, 1, spec),
            CongruenceTask::lift(Claim::Witnesses, p(7), 2, 1, 2, 1, spec),
            CongruenceTask::lift(Claim::SevenTerms, p(7), 2, 1, 2, 1, spec),
            CongruenceTask::vanishing(p(5), 2, 1, spec),
            CongruenceTask::harmonic(p(11), 2, 1, 7),
        ];
        for task in tasks {
            let report = run_task(&task).unwrap();
            assert!(report.is_consistent());
            assert!(report.holds, "{task}");
        }
    }

    #[test]
    fn dispatch_missing_field() {
        let mut task = CongruenceTask::gessel(p(5), 2);
        task.n = None;
        assert!(matches!(run_task(&task), Err(Error::InvalidConfig(_))));
    }
}
