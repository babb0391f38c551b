//! The Monster and Baby Monster inequality suites, driven entirely by a loaded [`DataSet`].
//!
//! Group and table names are fixed here and must match the class data files.

use num_rational::Ratio;

use super::data::{DataSet, OrderSpec, SubgroupRecord};
use super::report::{two_pow, verify_report, Report, ReportSpec};
use super::{int, is_prime, ClassTable, ExactInt};
use crate::error::{Error, Result};

pub const MONSTER: &str = "M";
pub const BABY: &str = "B";
pub const BABY_COVER: &str = "2.B";
/// `²E₆(2):2`, the quotient of the involution centralizer in the Baby Monster.
pub const LBAR: &str = "2E6(2):2";

/// Smallest class of prime order `r` or of any prime order in `keep`.
fn min_size<'a, T: ExactInt>(t: &'a ClassTable<T>, keep: impl Fn(u64) -> bool) -> Result<&'a T> {
    t.classes
        .iter()
        .filter(|c| is_prime(c.element_order) && keep(c.element_order))
        .map(|c| &c.size)
        .min()
        .ok_or_else(|| Error::Missing(format!("prime order classes in {}", t.name)))
}

/// Names of subgroups with raw data in the `²E₆(2):2` quotient; their Baby Monster records
/// belong to the Baby suites, everything else in the Baby Monster to the Monster suite.
fn baby_rows<T: ExactInt>(ds: &DataSet<T>) -> Vec<&SubgroupRecord<T>> {
    ds.subgroups_in(LBAR).collect()
}

/// `Q̂(𝕄, K, 2)` for every maximal `K̄` of the Baby Monster with data, `K` its preimage in `2.𝔹`.
pub fn monster<T: ExactInt>(ds: &DataSet<T>) -> Result<Vec<Report<T>>> {
    let m = ds.table(MONSTER)?;
    let b = ds.table(BABY)?;
    let skip: Vec<String> = baby_rows(ds).iter().map(|r| r.data.name.clone()).collect();
    let mut out = Vec::new();
    for rec in ds.subgroups_in(BABY).filter(|r| !skip.contains(&r.data.name)) {
        let mut spec = ReportSpec::new(format!("Q^(M, K, 2), K/Z = {}", rec.data.name), 2);
        let pushed = if rec.data.counts.is_empty() { vec![] } else { ds.push_counts(&rec.data, MONSTER)? };
        let counted = |label: &str| pushed.iter().find(|(l, _)| l == label).map(|(_, n)| n.clone());
        for r in b.orders().into_iter().filter(|&r| is_prime(r) && r % 2 == 1) {
            // Order 3 exactly when every class of K̄ meeting it is known; M classes nothing fuses to contribute 0.
            if r == 3 && b.of_order(3).all(|c| rec.data.count(&c.label).is_some()) {
                for c in m.of_order(3) {
                    if let Some(n) = counted(&c.label).filter(|n| !n.is_zero()) {
                        spec.class("alpha", &c.label, c.size.clone(), n);
                    }
                }
                continue;
            }
            let a = ds.elements_of_order(rec, r)?;
            if !a.is_zero() {
                spec.lemma("alpha", format!("i_{r}"), a, m.min_size(r).ok_or_else(|| Error::Missing(format!("order {r} in M")))?.clone());
            }
        }
        let inv: Vec<_> = b.of_order(2).collect();
        if !inv.is_empty() && inv.iter().all(|c| rec.data.count(&c.label).is_some()) {
            for c in m.of_order(2) {
                let n = counted(&c.label).ok_or_else(|| Error::Missing(format!("{} count in 2.{}", c.label, rec.data.name)))?;
                spec.class("beta", &c.label, c.size.clone(), n);
            }
        } else {
            let i2 = ds.elements_of_order(rec, 2)?;
            let d = i2 * int(2) + T::one();
            spec.lemma("beta", "2*i_2+1", d, m.min_size(2).ok_or_else(|| Error::Missing("involutions in M".into()))?.clone());
        }
        spec.bound("alpha", two_pow(-6));
        spec.bound("beta", two_pow(-2));
        out.push(verify_report(&spec)?);
    }
    if out.is_empty() {
        return Err(Error::Missing("Baby Monster maximal subgroup data".into()));
    }
    Ok(out)
}

/// Named contributions a Baby Monster row is split into.
struct Names {
    inv: &'static str,
    three: &'static str,
    five: &'static str,
    odd: &'static str,
}

/// `Q̂(𝔹, M, 3)` for `M` the preimage in `2.²E₆(2):2` of the subgroup with raw record `raw`.
fn baby_row<T: ExactInt>(ds: &DataSet<T>, raw: &SubgroupRecord<T>, names: &Names) -> Result<ReportSpec<T>> {
    let g = ds.table(BABY)?;
    let name = &raw.data.name;
    let order = raw.data.order.clone() * int(2);
    let mut spec = ReportSpec::new(format!("Q^(B, {name}, 3)"), 3);
    let printed = ds.find_subgroup(name, BABY);
    let count = |label: &str| printed.and_then(|p| p.data.count(label).cloned());
    let i2 = raw.elements(OrderSpec::Exactly(2)).map(|n| n.clone() * int(2) + T::one());

    let inv: Vec<_> = g.of_order(2).collect();
    let odd_total = raw.elements(OrderSpec::OddPrime).cloned();
    let has_inv_data = i2.is_some() || inv.iter().any(|c| count(&c.label).is_some());
    if !has_inv_data && odd_total.is_none() && raw.elements(OrderSpec::Exactly(3)).is_none() {
        spec.lemma(names.odd, "|M|", order, min_size(g, |_| true)?.clone());
        return Ok(spec);
    }

    let mut rest = Vec::new();
    for c in &inv {
        match count(&c.label) {
            Some(n) => spec.class(names.inv, &c.label, c.size.clone(), n),
            None => rest.push(*c),
        }
    }
    if !rest.is_empty() {
        let a = i2.clone().ok_or_else(|| Error::Missing(format!("involution count of {name}")))?;
        let b = rest.iter().map(|c| &c.size).min().unwrap().clone();
        let what = rest.iter().map(|c| c.label.as_str()).collect::<Vec<_>>().join("+");
        spec.lemma(names.inv, format!("{what} via 2*i_2+1"), a, b);
    }

    // Odd order classes: exact where the printed cells or the raw counts cover them.
    let lbar = ds.table(LBAR)?;
    let pushed = if raw.data.counts.is_empty() { vec![] } else { ds.push_counts(&raw.data, BABY)? };
    let from_raw = |r: u64| -> Option<Vec<(String, T, T)>> {
        let divides = raw.data.order.is_multiple_of(&int(r));
        if divides && !lbar.of_order(r).all(|c| raw.data.count(&c.label).is_some()) {
            return None;
        }
        let got = |l: &str| pushed.iter().find(|(t, _)| t == l).map(|(_, n)| n.clone()).unwrap_or_else(T::zero);
        Some(g.of_order(r).map(|c| (c.label.clone(), c.size.clone(), got(&c.label))).collect())
    };
    let threes: Option<Vec<(String, T, T)>> = if g.of_order(3).all(|c| count(&c.label).is_some()) {
        Some(g.of_order(3).map(|c| (c.label.clone(), c.size.clone(), count(&c.label).unwrap())).collect())
    } else {
        from_raw(3)
    };
    let higher: Option<Vec<(String, T, T)>> = g
        .orders()
        .into_iter()
        .filter(|&r| r >= 5 && is_prime(r))
        .map(from_raw)
        .collect::<Option<Vec<_>>>()
        .map(|v| v.into_iter().flatten().collect());
    let five_total = raw.elements(OrderSpec::PrimeAtLeast(5));
    match (threes, higher) {
        (Some(t), Some(h)) => {
            for (l, size, n) in t {
                spec.class(names.three, &l, size, n);
            }
            for (l, size, n) in h.into_iter().filter(|c| !c.2.is_zero()) {
                spec.class(names.five, &l, size, n);
            }
        }
        (Some(t), None) if five_total.is_some() => {
            for (l, size, n) in t {
                spec.class(names.three, &l, size, n);
            }
            spec.lemma(names.five, "r >= 5", five_total.unwrap().clone(), min_size(g, |r| r >= 5)?.clone());
        }
        _ => {
            if let Some(a) = odd_total {
                spec.lemma(names.odd, "odd r", a, min_size(g, |r| r % 2 == 1)?.clone());
            } else if let (Some(a3), Some(a5)) = (raw.elements(OrderSpec::Exactly(3)), five_total) {
                spec.lemma(names.three, "r = 3", a3.clone(), min_size(g, |r| r == 3)?.clone());
                spec.lemma(names.five, "r >= 5", a5.clone(), min_size(g, |r| r >= 5)?.clone());
            } else {
                spec.lemma(names.odd, "odd r, |M|", order, min_size(g, |r| r % 2 == 1)?.clone());
            }
        }
    }
    Ok(spec)
}

fn is_parabolic(name: &str) -> bool {
    name.starts_with('P')
}

/// `Q̂(𝔹, M, 3) = α + β + γ` for the maximal parabolics, with `α < 2/3`, `β < 2^-19`, `γ < 2^-10`.
pub fn baby_parabolics<T: ExactInt>(ds: &DataSet<T>) -> Result<Vec<Report<T>>> {
    let names = Names { inv: "gamma", three: "beta", five: "alpha", odd: "alpha+beta" };
    let mut out = Vec::new();
    for raw in baby_rows(ds).into_iter().filter(|r| is_parabolic(&r.data.name)) {
        let mut spec = baby_row(ds, raw, &names)?;
        spec.bound("alpha", Ratio::new(int(2), int(3)));
        spec.bound("beta", two_pow(-19));
        spec.bound("gamma", two_pow(-10));
        out.push(verify_report(&spec)?);
    }
    if out.is_empty() {
        return Err(Error::Missing("parabolic subgroup data".into()));
    }
    Ok(out)
}

/// `Q̂(𝔹, M, 3) < 1` for the non-parabolic rows, with the involution bounds quoted for some rows.
pub fn baby_nonparabolic<T: ExactInt>(ds: &DataSet<T>) -> Result<Vec<Report<T>>> {
    let names = Names { inv: "involutions", three: "r=3", five: "r>=5", odd: "odd" };
    let mut out = Vec::new();
    for raw in baby_rows(ds).into_iter().filter(|r| !is_parabolic(&r.data.name)) {
        let mut spec = baby_row(ds, raw, &names)?;
        match raw.data.name.as_str() {
            "O10-(2)" => spec.bound("involutions", two_pow(-24)),
            "F4(2)x2" => spec.bound("involutions", two_pow(-15)),
            _ => {}
        }
        out.push(verify_report(&spec)?);
    }
    if out.is_empty() {
        return Err(Error::Missing("non-parabolic subgroup data".into()));
    }
    Ok(out)
}
