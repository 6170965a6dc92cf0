use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::ring::Gen;

/// A Laurent monomial: generators with nonzero exponents, sorted by generator.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(Gen, i32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    /// Builds a monomial, merging repeated generators and rejecting negative
    /// exponents on non-Laurent generators.
    pub fn new(factors: impl IntoIterator<Item = (Gen, i32)>) -> Result<Self> {
        let mut v: Vec<(Gen, i32)> = factors.into_iter().collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        let mut out: Vec<(Gen, i32)> = Vec::with_capacity(v.len());
        for (g, e) in v {
            match out.last_mut() {
                Some((lg, le)) if *lg == g => *le += e,
                _ => out.push((g, e)),
            }
        }
        out.retain(|&(_, e)| e != 0);
        for &(g, e) in &out {
            if e < 0 && !g.allows_negative() {
                return Err(Error::InvalidArgument(format!(
                    "generator {g} does not admit negative exponents"
                )));
            }
        }
        Ok(Monomial(out))
    }

    pub fn gen(g: Gen, e: i32) -> Result<Self> {
        Monomial::new([(g, e)])
    }

    pub fn factors(&self) -> &[(Gen, i32)] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponent(&self, g: Gen) -> i32 {
        self.0
            .binary_search_by(|(h, _)| h.cmp(&g))
            .map(|i| self.0[i].1)
            .unwrap_or(0)
    }

    pub fn total_degree(&self) -> i64 {
        self.0.iter().map(|&(_, e)| e as i64).sum()
    }

    pub fn weight(&self) -> i64 {
        self.0.iter().map(|&(g, e)| g.weight() * e as i64).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    let e = a[i].1 + b[j].1;
                    if e != 0 {
                        out.push((a[i].0, e));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    /// Same monomial without generator `g`, together with the removed exponent.
    pub fn split_off(&self, g: Gen) -> (Monomial, i32) {
        let e = self.exponent(g);
        let rest = self.0.iter().copied().filter(|&(h, _)| h != g).collect();
        (Monomial(rest), e)
    }
}

/// Graded-lexicographic order: total exponent first, then the first generator
/// (in registry order) whose exponents differ decides, larger exponent greater.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.total_degree().cmp(&other.total_degree()) {
            Ordering::Equal => {}
            o => return o,
        }
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j) = (0, 0);
        loop {
            match (a.get(i), b.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(&(_, ea)), None) => return ea.cmp(&0),
                (None, Some(&(_, eb))) => return 0.cmp(&eb),
                (Some(&(ga, ea)), Some(&(gb, eb))) => match ga.cmp(&gb) {
                    Ordering::Less => return ea.cmp(&0),
                    Ordering::Greater => return 0.cmp(&eb),
                    Ordering::Equal => {
                        if ea != eb {
                            return ea.cmp(&eb);
                        }
                        i += 1;
                        j += 1;
                    }
                },
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (k, (g, e)) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            if *e == 1 {
                write!(f, "{g}")?;
            } else {
                write!(f, "{g}^{e}")?;
            }
        }
        Ok(())
    }
}
