//! Degrees in the real representation ring RO(K4), written in the ordered
//! basis `(1, α0, α1, β)`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// An element `c1·1 + cA0·α0 + cA1·α1 + cB·β` of RO(K4). Components may be
/// negative (virtual representations).
#[derive(
    Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
#[serde(from = "[i64; 4]", into = "[i64; 4]")]
pub struct RODegree {
    pub c1: i64,
    pub c_a0: i64,
    pub c_a1: i64,
    pub c_b: i64,
}

impl RODegree {
    pub const ZERO: RODegree = RODegree::new(0, 0, 0, 0);
    pub const ONE: RODegree = RODegree::new(1, 0, 0, 0);
    pub const ALPHA0: RODegree = RODegree::new(0, 1, 0, 0);
    pub const ALPHA1: RODegree = RODegree::new(0, 0, 1, 0);
    pub const BETA: RODegree = RODegree::new(0, 0, 0, 1);

    pub const fn new(c1: i64, c_a0: i64, c_a1: i64, c_b: i64) -> Self {
        Self {
            c1,
            c_a0,
            c_a1,
            c_b,
        }
    }

    pub const fn to_array(self) -> [i64; 4] {
        [self.c1, self.c_a0, self.c_a1, self.c_b]
    }

    pub const fn from_array(a: [i64; 4]) -> Self {
        Self::new(a[0], a[1], a[2], a[3])
    }

    /// Underlying real dimension.
    pub const fn total_dim(self) -> i64 {
        self.c1 + self.c_a0 + self.c_a1 + self.c_b
    }

    /// Dimension of the K4-fixed part, i.e. the trivial-summand coefficient.
    pub const fn fixed_dim(self) -> i64 {
        self.c1
    }

    pub fn is_zero(self) -> bool {
        self == Self::ZERO
    }

    /// Every degree with all four coordinates in `-k..=k`, in lexicographic
    /// order.
    pub fn cube(k: i64) -> impl Iterator<Item = RODegree> {
        let r = -k..=k;
        r.clone().flat_map(move |a| {
            let r = r.clone();
            r.clone().flat_map(move |b| {
                let r = r.clone();
                r.clone()
                    .flat_map(move |c| r.clone().map(move |d| RODegree::new(a, b, c, d)))
            })
        })
    }
}

/// `n·ρ_{K4} = (n, n, n, n)`.
pub const fn regular_rep(n: i64) -> RODegree {
    RODegree::new(n, n, n, n)
}

/// `n·ρ̄_{K4} = (0, n, n, n)`.
pub const fn reduced_regular_rep(n: i64) -> RODegree {
    RODegree::new(0, n, n, n)
}

impl From<[i64; 4]> for RODegree {
    fn from(a: [i64; 4]) -> Self {
        Self::from_array(a)
    }
}

impl From<RODegree> for [i64; 4] {
    fn from(d: RODegree) -> Self {
        d.to_array()
    }
}

impl Add for RODegree {
    type Output = RODegree;
    fn add(self, o: RODegree) -> RODegree {
        RODegree::new(
            self.c1 + o.c1,
            self.c_a0 + o.c_a0,
            self.c_a1 + o.c_a1,
            self.c_b + o.c_b,
        )
    }
}

impl AddAssign for RODegree {
    fn add_assign(&mut self, o: RODegree) {
        *self = *self + o;
    }
}

impl Sub for RODegree {
    type Output = RODegree;
    fn sub(self, o: RODegree) -> RODegree {
        self + (-o)
    }
}

impl SubAssign for RODegree {
    fn sub_assign(&mut self, o: RODegree) {
        *self = *self - o;
    }
}

impl Neg for RODegree {
    type Output = RODegree;
    fn neg(self) -> RODegree {
        RODegree::new(-self.c1, -self.c_a0, -self.c_a1, -self.c_b)
    }
}

impl Mul<RODegree> for i64 {
    type Output = RODegree;
    fn mul(self, d: RODegree) -> RODegree {
        RODegree::new(self * d.c1, self * d.c_a0, self * d.c_a1, self * d.c_b)
    }
}

impl fmt::Display for RODegree {
    /// Writes the `a+b*A0+c*A1+d*B` text form.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.c1)?;
        for (c, name) in [(self.c_a0, "A0"), (self.c_a1, "A1"), (self.c_b, "B")] {
            if c < 0 {
                write!(f, "-{}*{name}", -c)?;
            } else {
                write!(f, "+{c}*{name}")?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("malformed degree `{input}`: {reason}")]
pub struct DegreeParseError {
    pub input: String,
    pub reason: String,
}

impl FromStr for RODegree {
    type Err = DegreeParseError;

    /// Accepts `a,b,c,d`, the JSON array `[a,b,c,d]`, or a linear
    /// combination such as `1+2*A0-B` in the symbols `A0`, `A1`, `B`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |reason: &str| DegreeParseError {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(err("empty input"));
        }
        let inner = t
            .strip_prefix('[')
            .and_then(|x| x.strip_suffix(']'))
            .unwrap_or(&t);
        if inner.contains(',') {
            let parts: Vec<&str> = inner.split(',').collect();
            if parts.len() != 4 {
                return Err(err("expected four comma-separated integers"));
            }
            let mut a = [0i64; 4];
            for (slot, p) in a.iter_mut().zip(parts) {
                *slot = p.parse().map_err(|_| err("non-integer component"))?;
            }
            return Ok(RODegree::from_array(a));
        }
        parse_linear(&t).ok_or_else(|| err("expected a+b*A0+c*A1+d*B"))
    }
}

fn parse_linear(t: &str) -> Option<RODegree> {
    let mut out = RODegree::ZERO;
    let bytes = t.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let mut sign = 1;
        if bytes[i] == b'+' || bytes[i] == b'-' {
            if bytes[i] == b'-' {
                sign = -1;
            }
            i += 1;
        } else if i != 0 {
            return None;
        }
        let start = i;
        while i < bytes.len() && bytes[i] != b'+' && bytes[i] != b'-' {
            i += 1;
        }
        let term = &t[start..i];
        if term.is_empty() {
            return None;
        }
        let (coef, sym) = match term.split_once('*') {
            Some((c, s)) => (c.parse::<i64>().ok()?, s),
            None => match term.parse::<i64>() {
                Ok(c) => (c, ""),
                Err(_) => (1, term),
            },
        };
        let unit = match sym {
            "" | "1" => RODegree::ONE,
            "A0" | "a0" => RODegree::ALPHA0,
            "A1" | "a1" => RODegree::ALPHA1,
            "B" | "b" => RODegree::BETA,
            _ => return None,
        };
        out += (sign * coef) * unit;
    }
    Some(out)
}
