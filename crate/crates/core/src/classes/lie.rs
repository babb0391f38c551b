//! Orders of finite groups of Lie type.

use std::str::FromStr;

use super::{int, pow, ExactInt};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LieSeries {
    GL,
    SL,
    /// `PSL`
    L,
    GU,
    SU,
    /// `PSU`
    U,
    Sp,
    /// `PSp`
    S,
    /// Simple `PΩ⁺` in even dimension.
    OmegaPlus,
    /// Simple `PΩ⁻` in even dimension.
    OmegaMinus,
    /// Simple `Ω` in odd dimension.
    Omega,
    G2,
    F4,
    /// Simple `E₆(q)`.
    E6,
    /// Simple `²E₆(q)`.
    TwistedE6,
}

impl FromStr for LieSeries {
    type Err = Error;

    fn from_str(s: &str) -> Result<LieSeries> {
        Ok(match s {
            "GL" => LieSeries::GL,
            "SL" => LieSeries::SL,
            "L" | "PSL" => LieSeries::L,
            "GU" => LieSeries::GU,
            "SU" => LieSeries::SU,
            "U" | "PSU" => LieSeries::U,
            "Sp" => LieSeries::Sp,
            "S" | "PSp" => LieSeries::S,
            "O+" | "Omega+" => LieSeries::OmegaPlus,
            "O-" | "Omega-" => LieSeries::OmegaMinus,
            "O" | "Omega" => LieSeries::Omega,
            "G2" => LieSeries::G2,
            "F4" => LieSeries::F4,
            "E6" => LieSeries::E6,
            "2E6" => LieSeries::TwistedE6,
            _ => return Err(Error::Invalid(format!("unsupported series {s}"))),
        })
    }
}

/// `∏ (q^e − 1)` over `es`, with `+1` instead wherever `plus` says so.
fn cyclotomic<T: ExactInt>(q: &T, es: &[(u32, bool)]) -> T {
    es.iter().fold(T::one(), |acc, &(e, plus)| {
        let p = pow(q, e);
        acc * if plus { p + T::one() } else { p - T::one() }
    })
}

/// Order of the group in `series` of dimension `n` (rank for exceptional types) over `GF(q)`.
pub fn lie_group_order<T: ExactInt>(series: LieSeries, n: u32, q: &T) -> Result<T> {
    let bad = || Error::Invalid(format!("{series:?} is not defined for n = {n}"));
    if *q < int(2) {
        return Err(Error::Invalid(format!("field size {q} too small")));
    }
    let one = T::one();
    let qm1 = q.clone() - one.clone();
    let qp1 = q.clone() + one.clone();
    let n2 = n * n.saturating_sub(1) / 2;
    Ok(match series {
        LieSeries::GL | LieSeries::SL | LieSeries::L => {
            if n == 0 {
                return Err(bad());
            }
            let es: Vec<(u32, bool)> = (1..=n).map(|i| (i, false)).collect();
            let gl = pow(q, n2) * cyclotomic(q, &es);
            match series {
                LieSeries::GL => gl,
                LieSeries::SL => gl / qm1,
                _ => gl / qm1.clone() / qm1.gcd(&int(n as u64)),
            }
        }
        LieSeries::GU | LieSeries::SU | LieSeries::U => {
            if n == 0 {
                return Err(bad());
            }
            let es: Vec<(u32, bool)> = (1..=n).map(|i| (i, i % 2 == 1)).collect();
            let gu = pow(q, n2) * cyclotomic(q, &es);
            match series {
                LieSeries::GU => gu,
                LieSeries::SU => gu / qp1,
                _ => gu / qp1.clone() / qp1.gcd(&int(n as u64)),
            }
        }
        LieSeries::Sp | LieSeries::S | LieSeries::Omega => {
            let m = match series {
                LieSeries::Omega if n % 2 == 1 && n >= 3 => (n - 1) / 2,
                LieSeries::Sp | LieSeries::S if n % 2 == 0 && n >= 2 => n / 2,
                _ => return Err(bad()),
            };
            let es: Vec<(u32, bool)> = (1..=m).map(|i| (2 * i, false)).collect();
            let sp = pow(q, m * m) * cyclotomic(q, &es);
            match series {
                LieSeries::Sp => sp,
                _ => sp / qm1.gcd(&int(2)),
            }
        }
        LieSeries::OmegaPlus | LieSeries::OmegaMinus => {
            if n % 2 == 1 || n < 4 {
                return Err(bad());
            }
            let m = n / 2;
            let plus = series == LieSeries::OmegaMinus;
            let mut es: Vec<(u32, bool)> = (1..m).map(|i| (2 * i, false)).collect();
            es.push((m, plus));
            let qm = pow(q, m);
            let d = if plus { qm + one } else { qm - one };
            pow(q, m * (m - 1)) * cyclotomic(q, &es) / d.gcd(&int(4))
        }
        LieSeries::G2 if n == 2 => pow(q, 6) * cyclotomic(q, &[(6, false), (2, false)]),
        LieSeries::F4 if n == 4 => pow(q, 24) * cyclotomic(q, &[(12, false), (8, false), (6, false), (2, false)]),
        LieSeries::E6 if n == 6 => {
            let es = [(12, false), (9, false), (8, false), (6, false), (5, false), (2, false)];
            pow(q, 36) * cyclotomic(q, &es) / qm1.gcd(&int(3))
        }
        LieSeries::TwistedE6 if n == 6 => {
            let es = [(12, false), (9, true), (8, false), (6, false), (5, true), (2, false)];
            pow(q, 36) * cyclotomic(q, &es) / qp1.gcd(&int(3))
        }
        _ => return Err(bad()),
    })
}

/// `|G| / |C_G(x)|`, refusing non-divisors.
pub fn centralizer_class_size<T: ExactInt>(group_order: &T, centralizer_order: &T) -> Result<T> {
    let (q, r) = group_order.div_rem(centralizer_order);
    if !r.is_zero() || centralizer_order.is_zero() {
        return Err(Error::NotIntegral(format!("{group_order}/{centralizer_order}")));
    }
    Ok(q)
}
