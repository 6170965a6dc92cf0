//! The fixed registry of symbolic generators of the coefficient ring.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A named generator of the graded coefficient ring.
///
/// `Ipi2` stands for the period `2πi`, `U` for `t^{1/2}` (so `t = u²` is a
/// convention of the caller, not a rewrite rule). The symmetric-function
/// generators `E`, `H`, `S` and the characteristic classes `C`, `P` share
/// the same polynomial engine as the constants.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Gen {
    Gamma,
    /// `ζ(k)`, `k ≥ 2`.
    Zeta(u32),
    Ipi2,
    T,
    U,
    Delta,
    Epsilon,
    Q,
    /// Elementary symmetric function `e_n`.
    E(u32),
    /// Complete symmetric function `h_n`.
    H(u32),
    /// Power sum `s_n`.
    S(u32),
    /// Chern class `c_k`.
    C(u32),
    /// Pontryagin class `p_k`.
    P(u32),
}

impl Gen {
    fn key(self) -> (&'static str, u32) {
        match self {
            Gen::Gamma => ("gamma", 0),
            Gen::Zeta(k) => ("zeta", k),
            Gen::Ipi2 => ("ipi2", 0),
            Gen::T => ("t", 0),
            Gen::U => ("u", 0),
            Gen::Delta => ("delta", 0),
            Gen::Epsilon => ("epsilon", 0),
            Gen::Q => ("q", 0),
            Gen::E(n) => ("e", n),
            Gen::H(n) => ("h", n),
            Gen::S(n) => ("s", n),
            Gen::C(n) => ("c", n),
            Gen::P(n) => ("p", n),
        }
    }

    pub fn weight(self) -> i64 {
        match self {
            Gen::Gamma | Gen::Ipi2 => 1,
            Gen::Zeta(k) | Gen::E(k) | Gen::H(k) | Gen::S(k) | Gen::C(k) => k as i64,
            Gen::P(k) => 2 * k as i64,
            Gen::T | Gen::U | Gen::Q => 0,
            Gen::Delta => 2,
            Gen::Epsilon => 4,
        }
    }

    /// Only `ipi2`, `t` and `u` are Laurent generators.
    pub fn allows_negative(self) -> bool {
        matches!(self, Gen::Ipi2 | Gen::T | Gen::U)
    }

    pub fn is_odd_zeta(self) -> bool {
        matches!(self, Gen::Zeta(k) if k % 2 == 1)
    }

    fn validate(self) -> Result<Self> {
        let ok = match self {
            Gen::Zeta(k) => k >= 2,
            Gen::E(n) | Gen::H(n) | Gen::S(n) | Gen::C(n) | Gen::P(n) => n >= 1,
            _ => true,
        };
        if ok {
            Ok(self)
        } else {
            Err(Error::Parse(format!(
                "generator index out of range: {self}"
            )))
        }
    }
}

impl Ord for Gen {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for Gen {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gen::Zeta(k) => write!(f, "zeta{k}"),
            Gen::E(n) => write!(f, "e{n}"),
            Gen::H(n) => write!(f, "h{n}"),
            Gen::S(n) => write!(f, "s{n}"),
            Gen::C(n) => write!(f, "c{n}"),
            Gen::P(n) => write!(f, "p{n}"),
            other => f.write_str(other.key().0),
        }
    }
}

impl FromStr for Gen {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let fixed = match s {
            "gamma" => Some(Gen::Gamma),
            "ipi2" => Some(Gen::Ipi2),
            "t" => Some(Gen::T),
            "u" => Some(Gen::U),
            "delta" => Some(Gen::Delta),
            "epsilon" => Some(Gen::Epsilon),
            "q" => Some(Gen::Q),
            _ => None,
        };
        if let Some(g) = fixed {
            return Ok(g);
        }
        let split = s
            .find(|c: char| c.is_ascii_digit())
            .ok_or_else(|| Error::Parse(format!("unknown generator `{s}`")))?;
        let (base, digits) = s.split_at(split);
        let n: u32 = digits
            .parse()
            .map_err(|_| Error::Parse(format!("unknown generator `{s}`")))?;
        let g = match base {
            "zeta" => Gen::Zeta(n),
            "e" => Gen::E(n),
            "h" => Gen::H(n),
            "s" => Gen::S(n),
            "c" => Gen::C(n),
            "p" => Gen::P(n),
            _ => return Err(Error::Parse(format!("unknown generator `{s}`"))),
        };
        g.validate()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for g in [
            Gen::Gamma,
            Gen::Zeta(11),
            Gen::Ipi2,
            Gen::T,
            Gen::U,
            Gen::Delta,
            Gen::Epsilon,
            Gen::Q,
            Gen::E(3),
            Gen::H(2),
            Gen::S(10),
            Gen::C(1),
            Gen::P(4),
        ] {
            assert_eq!(g.to_string().parse::<Gen>().unwrap(), g);
        }
        assert!("zeta1".parse::<Gen>().is_err());
        assert!("e0".parse::<Gen>().is_err());
        assert!("x3".parse::<Gen>().is_err());
    }

    #[test]
    fn weights() {
        assert_eq!(Gen::Gamma.weight(), 1);
        assert_eq!(Gen::Zeta(5).weight(), 5);
        assert_eq!(Gen::Ipi2.weight(), 1);
        assert_eq!(Gen::Delta.weight(), 2);
        assert_eq!(Gen::Epsilon.weight(), 4);
        assert_eq!(Gen::E(7).weight(), 7);
        assert_eq!(Gen::P(2).weight(), 4);
        assert_eq!(Gen::T.weight(), 0);
    }

    #[test]
    fn numeric_suffixes_order_numerically() {
        assert!(Gen::Zeta(2) < Gen::Zeta(10));
        assert!(Gen::E(9) < Gen::E(10));
    }
}
