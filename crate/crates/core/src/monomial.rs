use std::fmt;

use serde::{Deserialize, Serialize};

/// An exponent vector `x^x y^y`.
///
/// The derived `Ord` is only a storage order (by `x`, then `y`); monomial
/// orders live in [`crate::groebner::MonomialOrder`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "(u32, u32)", into = "(u32, u32)")]
pub struct Monomial {
    pub x: u32,
    pub y: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { x: 0, y: 0 };

    pub const fn new(x: u32, y: u32) -> Self {
        Monomial { x, y }
    }

    pub fn divides(self, other: Monomial) -> bool {
        self.x <= other.x && self.y <= other.y
    }

    pub fn lcm(self, other: Monomial) -> Monomial {
        Monomial::new(self.x.max(other.x), self.y.max(other.y))
    }

    pub fn gcd(self, other: Monomial) -> Monomial {
        Monomial::new(self.x.min(other.x), self.y.min(other.y))
    }

    pub fn mul(self, other: Monomial) -> Monomial {
        Monomial::new(self.x + other.x, self.y + other.y)
    }

    /// `self / other`, if `other` divides `self`.
    pub fn checked_div(self, other: Monomial) -> Option<Monomial> {
        other.divides(self).then(|| Monomial::new(self.x - other.x, self.y - other.y))
    }

    /// Shift by a signed offset; `None` if an exponent would become negative.
    pub fn shifted(self, dx: i64, dy: i64) -> Option<Monomial> {
        from_signed(self.x as i64 + dx, self.y as i64 + dy)
    }

    pub fn is_one(self) -> bool {
        self.x == 0 && self.y == 0
    }

    pub fn total_degree(self) -> u32 {
        self.x + self.y
    }

    /// `x^a y^b` style with a space separator, for DOT labels.
    pub fn spaced(self) -> String {
        let mut parts = Vec::new();
        if self.x > 0 {
            parts.push(power("x", self.x));
        }
        if self.y > 0 {
            parts.push(power("y", self.y));
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join(" ")
        }
    }
}

/// Build a monomial from signed exponents, rejecting negatives.
pub fn from_signed(x: i64, y: i64) -> Option<Monomial> {
    (x >= 0 && y >= 0).then(|| Monomial::new(x as u32, y as u32))
}

fn power(var: &str, e: u32) -> String {
    if e == 1 {
        var.to_string()
    } else {
        format!("{var}^{e}")
    }
}

impl From<(u32, u32)> for Monomial {
    fn from((x, y): (u32, u32)) -> Self {
        Monomial::new(x, y)
    }
}

impl From<Monomial> for (u32, u32) {
    fn from(m: Monomial) -> Self {
        (m.x, m.y)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.x, self.y) {
            (0, 0) => write!(f, "1"),
            (a, 0) => write!(f, "{}", power("x", a)),
            (0, b) => write!(f, "{}", power("y", b)),
            (a, b) => write!(f, "{}*{}", power("x", a), power("y", b)),
        }
    }
}
