//! Exhaustive property suites over `S_n` and the other built groups.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::bijections::{
    dyck_of_perm, minimal_fiber_rep, steingrimsson_phi, steingrimsson_phi_inverse,
};
use crate::decomp::{shallow_decomp, verify_factorization};
use crate::enumeration::{self, Class, JointPair};
use crate::error::{Error, Result};
use crate::groups::{
    dihedral_depth_formula, dihedral_gf, dihedral_gf_by_elements, Element, GroupBackend, GroupKind,
    MAX_B, MAX_DIHEDRAL, MIN_DIHEDRAL,
};
use crate::known;
use crate::oracle;
use crate::patterns;
use crate::perm::Permutation;
use crate::stats;

/// Largest `n` accepted by [`run_suite`].
pub const MAX_VERIFY_N: usize = 8;
/// Largest `n` for the factorization-enumeration check.
const MAX_FACTORIZATION_N: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    All,
    Core,
    Bijection,
    Oracle,
    Patterns,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(Suite::All),
            "core" => Ok(Suite::Core),
            "bijection" => Ok(Suite::Bijection),
            "oracle" => Ok(Suite::Oracle),
            "patterns" => Ok(Suite::Patterns),
            other => Err(Error::MalformedToken(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckResult {
    fn new(name: impl Into<String>, failures: Vec<String>, checked: usize) -> Self {
        let passed = failures.is_empty();
        let detail = if passed {
            format!("{checked} checked")
        } else {
            format!(
                "{} of {checked} failed, first: {}",
                failures.len(),
                failures[0]
            )
        };
        Self {
            name: name.into(),
            passed,
            detail,
        }
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{tag} {}: {}", self.name, self.detail)
    }
}

/// Runs `suite` for every size up to `n` (`1 ≤ n ≤ 8`).
pub fn run_suite(n: usize, suite: Suite) -> Result<Vec<CheckResult>> {
    if n == 0 {
        return Err(Error::UnderMin {
            what: "n",
            value: 0,
            min: 1,
        });
    }
    if n > MAX_VERIFY_N {
        return Err(Error::OverCap {
            what: "n",
            value: n,
            cap: MAX_VERIFY_N,
        });
    }
    let mut out = Vec::new();
    if matches!(suite, Suite::All | Suite::Core) {
        out.extend(core_suite(n)?);
    }
    if matches!(suite, Suite::All | Suite::Bijection) {
        out.extend(bijection_suite(n)?);
    }
    if matches!(suite, Suite::All | Suite::Oracle) {
        out.extend(oracle_suite(n)?);
    }
    if matches!(suite, Suite::All | Suite::Patterns) {
        out.extend(patterns_suite(n)?);
    }
    Ok(out)
}

fn over_all(
    n: usize,
    mut check: impl FnMut(&Permutation) -> Option<String>,
) -> (Vec<String>, usize) {
    let mut failures = Vec::new();
    let mut count = 0;
    for w in Permutation::all(n) {
        count += 1;
        if let Some(f) = check(&w) {
            failures.push(f);
        }
    }
    (failures, count)
}

fn core_suite(n: usize) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    for m in 1..=n {
        let table = enumeration::depth_distribution(GroupKind::A(m))?;
        let expected = known::symmetric_depth_row(m).expect("fixture rows cover n ≤ 8");
        let failures = if table.counts == expected {
            vec![]
        } else {
            vec![format!("got {:?}", table.counts)]
        };
        out.push(CheckResult::new(
            format!("depth distribution S_{m}"),
            failures,
            1,
        ));

        let (failures, count) = over_all(m, |w| {
            let report = verify_factorization(w, &shallow_decomp(w));
            (!report.passed()).then(|| format!("{w}"))
        });
        out.push(CheckResult::new(
            format!("factorization certificates S_{m}"),
            failures,
            count,
        ));

        let bound = stats::max_depth_bound(m);
        let maximizers = table.counts.get(bound).copied().unwrap_or(0);
        let failures = if table.max_value() == bound && Ok(maximizers) == stats::max_depth_count(m)
        {
            vec![]
        } else {
            vec![format!(
                "max {} with {maximizers} maximizers",
                table.max_value()
            )]
        };
        out.push(CheckResult::new(
            format!("extremal depth S_{m}"),
            failures,
            1,
        ));

        if m <= 7 {
            let (failures, count) = over_all(m, |w| {
                let d = stats::depth(w);
                for i in 1..=m {
                    for j in i + 1..=m {
                        if w.get(i) < w.get(j) {
                            let t = crate::perm::Transposition::new(i, j).ok()?;
                            let after = w.apply_transposition_right(t).ok()?;
                            let predicted = stats::depth_after_transposition(w, i, j).ok()?;
                            if predicted != stats::depth(&after) || predicted < d {
                                return Some(format!("{w} t({i},{j})"));
                            }
                        }
                    }
                }
                None
            });
            out.push(CheckResult::new(
                format!("depth after transposition S_{m}"),
                failures,
                count,
            ));
        }
    }
    Ok(out)
}

fn bijection_suite(n: usize) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    for m in 1..=n {
        let drop_des = enumeration::joint_distribution(m, JointPair::DropDes)?;
        let dep_exc = enumeration::joint_distribution(m, JointPair::DepExc)?;
        let failures = if drop_des.poly == dep_exc.poly {
            vec![]
        } else {
            vec![format!("{} vs {}", drop_des.poly, dep_exc.poly)]
        };
        out.push(CheckResult::new(
            format!("equidistribution S_{m}"),
            failures,
            1,
        ));

        let (failures, count) = over_all(m, |w| {
            let v = steingrimsson_phi(w);
            let ok = steingrimsson_phi_inverse(&v) == *w
                && stats::descents(w) == stats::excedances(&v)
                && stats::descent_drop(w) == stats::depth(&v);
            (!ok).then(|| format!("{w}"))
        });
        out.push(CheckResult::new(format!("phi S_{m}"), failures, count));

        let (failures, count) = over_all(m, |w| {
            let rep = minimal_fiber_rep(&dyck_of_perm(w));
            let ok = (rep == *w) == patterns::is_fc(w)
                && patterns::is_fc(&rep)
                && dyck_of_perm(&rep) == dyck_of_perm(w);
            (!ok).then(|| format!("{w}"))
        });
        out.push(CheckResult::new(
            format!("dyck fibers S_{m}"),
            failures,
            count,
        ));
    }
    Ok(out)
}

fn oracle_suite(n: usize) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    for m in 1..=n.min(7) {
        let backend = GroupBackend::build(GroupKind::A(m))?;
        let dep = oracle::depth_oracle(&backend);
        let rl = oracle::reflection_length_oracle(&backend);
        let mut failures = Vec::new();
        for (g, element) in backend.elements().iter().enumerate() {
            let Element::Perm(w) = element else {
                unreachable!("type A backends hold permutations")
            };
            let formula = stats::depth(w);
            let weight = shallow_decomp(w).total_weight();
            if dep[g] != formula || formula != weight || rl[g] != stats::reflection_length(w) {
                failures.push(format!("{w}"));
            }
        }
        out.push(CheckResult::new(
            format!("three-way depth S_{m}"),
            failures,
            backend.order(),
        ));
    }

    let mut failures = Vec::new();
    for m in MIN_DIHEDRAL..=MAX_DIHEDRAL {
        let backend = GroupBackend::build(GroupKind::I2(m))?;
        let dep = oracle::depth_oracle(&backend);
        for (g, element) in backend.elements().iter().enumerate() {
            let Element::Dihedral(x) = element else {
                unreachable!("dihedral backends hold dihedral elements")
            };
            if dep[g] != dihedral_depth_formula(x) || backend.length(g) != x.length() {
                failures.push(format!("I2({m}) {x}"));
            }
        }
        if dihedral_gf(m)? != dihedral_gf_by_elements(m)? {
            failures.push(format!("I2({m}) generating polynomial"));
        }
    }
    out.push(CheckResult::new(
        "dihedral depth I2(2..12)",
        failures,
        MAX_DIHEDRAL - 1,
    ));

    for m in 1..=n.min(MAX_B) {
        let backend = GroupBackend::build(GroupKind::B(m))?;
        let dep = oracle::depth_oracle(&backend);
        let rl = oracle::reflection_length_oracle(&backend);
        let mut failures = Vec::new();
        for g in 0..backend.order() {
            let l = backend.length(g);
            if !(rl[g] <= dep[g] && dep[g] <= l) || (dep[g] == rl[g]) != (l == rl[g]) {
                failures.push(format!("{}", backend.element(g)));
            }
        }
        if m == 2 {
            let b2 = enumeration::depth_distribution(GroupKind::B(2))?;
            let i4 = enumeration::depth_distribution(GroupKind::I2(4))?;
            if b2.counts != i4.counts {
                failures.push(format!("B_2 {:?} vs I2(4) {:?}", b2.counts, i4.counts));
            }
        }
        out.push(CheckResult::new(
            format!("depth bounds B_{m}"),
            failures,
            backend.order(),
        ));
    }

    for m in 1..=n.min(MAX_FACTORIZATION_N) {
        let (failures, count) = simple_factorizations_iff_free(m)?;
        out.push(CheckResult::new(
            format!("simple factorizations S_{m}"),
            failures,
            count,
        ));
    }
    Ok(out)
}

/// For `w` with `ℓ = ℓ'`: every factorization into `ℓ(w)` reflections uses
/// only simple reflections iff `w` is free.
pub(crate) fn simple_factorizations_iff_free(n: usize) -> Result<(Vec<String>, usize)> {
    let backend = GroupBackend::build(GroupKind::A(n))?;
    let simple: Vec<bool> = backend
        .reflections()
        .iter()
        .map(|&t| backend.length(t) == 1)
        .collect();
    let mut failures = Vec::new();
    let mut checked = 0;
    for (g, element) in backend.elements().iter().enumerate() {
        let Element::Perm(w) = element else {
            unreachable!("type A backends hold permutations")
        };
        let l = stats::length(w);
        if l != stats::reflection_length(w) {
            continue;
        }
        checked += 1;
        let factorizations = oracle::enumerate_min_factorizations(&backend, g, l)?;
        let all_simple = factorizations
            .iter()
            .all(|f| f.iter().all(|&slot| simple[slot]));
        if factorizations.is_empty() || all_simple != patterns::is_free(w) {
            failures.push(format!("{w}"));
        }
    }
    Ok((failures, checked))
}

fn patterns_suite(n: usize) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    for m in 1..=n {
        let (failures, count) = over_all(m, |w| {
            let (rl, d, l) = (
                stats::reflection_length(w),
                stats::depth(w),
                stats::length(w),
            );
            let ok = patterns::is_fc(w) == (d == l)
                && patterns::is_boolean(w) == (rl == l)
                && patterns::is_boolean(w) == (rl == d);
            (!ok).then(|| format!("{w}"))
        });
        out.push(CheckResult::new(
            format!("pattern characterizations S_{m}"),
            failures,
            count,
        ));

        let mut classes = vec![Class::Fc, Class::Boolean, Class::Free];
        if m <= 7 {
            classes.extend((0..m).map(Class::BooleanByLength));
        }
        let mut failures = Vec::new();
        for class in &classes {
            let c = enumeration::count_class(m, *class)?;
            if !c.agrees() {
                failures.push(format!("{class}: {} vs {:?}", c.exhaustive, c.closed_form));
            }
        }
        out.push(CheckResult::new(
            format!("class counts S_{m}"),
            failures,
            classes.len(),
        ));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_size_passes() {
        let results = run_suite(1, Suite::All).unwrap();
        assert!(!results.is_empty());
        assert!(results.iter().all(|r| r.passed), "{results:?}");
    }

    #[test]
    fn all_suites_pass_at_five() {
        for r in run_suite(5, Suite::All).unwrap() {
            assert!(r.passed, "{r}");
        }
    }

    #[test]
    fn caps() {
        assert!(run_suite(0, Suite::Core).is_err());
        assert!(run_suite(9, Suite::Core).is_err());
        assert_eq!("oracle".parse::<Suite>().unwrap(), Suite::Oracle);
        assert!("everything".parse::<Suite>().is_err());
    }
}
