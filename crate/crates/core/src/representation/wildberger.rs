//! Wildberger's indices `e_{m,n,ℓ}` for the cone basis of `sl(3)`.
//!
//! With `X = δ_2`, `U = δ_3`, `Y = δ_13`, `E = δ_23`, the cone basis of
//! `V^{(a,b)}` consists of `U^u E^e X^x` (`u + x <= a`, `e <= b`) and
//! `U^u E^e Y^y` (`u <= a`, `e + y <= b`).

use alloc::vec::Vec;
use core::fmt;

use crate::polyring::{DeltaVariable, Monomial};
use crate::{Error, Rational, Result, Weight};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct WildbergerIndex {
    m: i64,
    n: i64,
    l: i64,
}

impl WildbergerIndex {
    /// Checks `m, n >= 0`, `-n <= ℓ <= 2m - n`, `m - 2n <= ℓ <= m` and
    /// `ℓ ≡ max(m, n) (mod 2)`.
    pub fn new(m: i64, n: i64, l: i64) -> Result<Self> {
        let bad = |why: &str| Err(Error::InvalidIndex(alloc::format!("e({m},{n},{l}): {why}")));
        if m < 0 || n < 0 {
            return bad("negative degree");
        }
        if l < -n || l > 2 * m - n || l < m - 2 * n || l > m {
            return bad("ℓ out of range");
        }
        if (l - m.max(n)).rem_euclid(2) != 0 {
            return bad("parity");
        }
        Ok(WildbergerIndex { m, n, l })
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn l(&self) -> i64 {
        self.l
    }

    /// Exponents `(u, e, x, y)` of the monomial `U^u E^e X^x Y^y`.
    pub fn exponents(&self) -> (i64, i64, i64, i64) {
        let WildbergerIndex { m, n, l } = *self;
        if m >= n {
            (n - (m - l) / 2, (m - l) / 2, m - n, 0)
        } else {
            (((n + l) / 2), m - (n + l) / 2, 0, n - m)
        }
    }

    /// Index of `U^u E^e X^x Y^y`; `x` and `y` cannot both be positive.
    pub fn from_exponents(u: i64, e: i64, x: i64, y: i64) -> Result<Self> {
        if x > 0 && y > 0 {
            return Err(Error::InvalidIndex(alloc::format!("U^{u}E^{e}X^{x}Y^{y} is not a cone monomial")));
        }
        if y == 0 {
            WildbergerIndex::new(u + e + x, u + e, u + x - e)
        } else {
            WildbergerIndex::new(u + e, u + e + y, u - e - y)
        }
    }

    /// Whether the monomial lies in the cone slice of `V^{(a,b)}`.
    pub fn fits(&self, a: i64, b: i64) -> bool {
        let (u, e, x, y) = self.exponents();
        u + x <= a && e + y <= b
    }

    /// `τ^{(a,b)}(e_{m,n,ℓ}) = e_{a+b-n, a+b-m, a-b+m-n-ℓ}`.
    pub fn tau(&self, a: i64, b: i64) -> Result<Self> {
        WildbergerIndex::new(a + b - self.n, a + b - self.m, a - b + self.m - self.n - self.l)
    }

    /// `X_α` in these coordinates.
    pub fn x_alpha(&self) -> Vec<(Rational, WildbergerIndex)> {
        let WildbergerIndex { m, n, l } = *self;
        if m > n {
            terms(&[((m - l) / 2, (m - 1, n, l + 1)), (m - n + (m - l) / 2, (m - 1, n, l - 1))])
        } else {
            terms(&[(m - (n + l) / 2, (m - 1, n, l))])
        }
    }

    /// `X_β` in these coordinates. The first case covers `m = n` as well.
    pub fn x_beta(&self) -> Vec<(Rational, WildbergerIndex)> {
        let WildbergerIndex { m, n, l } = *self;
        if m >= n {
            terms(&[(n - (m - l) / 2, (m, n - 1, l))])
        } else {
            terms(&[(n - m + (n + l) / 2, (m, n - 1, l + 1)), ((n + l) / 2, (m, n - 1, l - 1))])
        }
    }
}

fn terms(raw: &[(i64, (i64, i64, i64))]) -> Vec<(Rational, WildbergerIndex)> {
    raw.iter()
        .filter(|(c, _)| *c != 0)
        .map(|&(c, (m, n, l))| {
            let idx = WildbergerIndex::new(m, n, l).expect("nonzero terms stay in range");
            (Rational::from_integer(c.into()), idx)
        })
        .collect()
}

impl fmt::Display for WildbergerIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e({},{},{})", self.m, self.n, self.l)
    }
}

fn letter(c: char) -> DeltaVariable {
    DeltaVariable::from_letter(3, c).expect("sl(3) letter")
}

fn check_weight(lambda: &Weight) -> Result<(i64, i64)> {
    if lambda.n() != 3 || !lambda.is_dominant() {
        return Err(Error::InvalidWeight(alloc::format!("{lambda} is not a dominant sl(3) weight")));
    }
    Ok((lambda.get(1), lambda.get(2)))
}

/// The cone monomial of `e_{m,n,ℓ}` in `V^{(a,b)}`.
pub fn wildberger_map(idx: &WildbergerIndex, lambda: &Weight) -> Result<Monomial> {
    let (a, b) = check_weight(lambda)?;
    if !idx.fits(a, b) {
        return Err(Error::InvalidIndex(alloc::format!("{idx} is not in V{lambda}")));
    }
    let (u, e, x, y) = idx.exponents();
    let mut m = Monomial::one();
    for (c, k) in [('U', u), ('E', e), ('X', x), ('Y', y)] {
        m = m.mul(&Monomial::pow(letter(c), k as u32));
    }
    Ok(m)
}

/// Inverse of [`wildberger_map`].
pub fn wildberger_index(m: &Monomial, lambda: &Weight) -> Result<WildbergerIndex> {
    let (a, b) = check_weight(lambda)?;
    let exp = |c| i64::from(m.exponent(&letter(c)));
    if m.iter().any(|(v, _)| !matches!(v.letter(), Some('U' | 'E' | 'X' | 'Y')) || v.n() != 3) {
        return Err(Error::InvalidIndex(alloc::format!("{m} is not an sl(3) cone monomial")));
    }
    let idx = WildbergerIndex::from_exponents(exp('U'), exp('E'), exp('X'), exp('Y'))?;
    if !idx.fits(a, b) {
        return Err(Error::InvalidIndex(alloc::format!("{idx} is not in V{lambda}")));
    }
    Ok(idx)
}
