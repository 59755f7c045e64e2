//! Sparse monomials with a fixed graded-lexicographic order.

use std::cmp::Ordering;

/// A monomial in the variables of some ring, stored as a sparse exponent
/// vector. Exponents are signed so that Laurent-inverted variables can carry
/// negative powers; no zero exponents are stored.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial {
    // (variable index, exponent), sorted by variable index, exponent != 0
    exps: Vec<(u32, i32)>,
}

impl Monomial {
    /// The empty monomial, i.e. the unit.
    pub fn one() -> Self {
        Monomial { exps: Vec::new() }
    }

    /// The monomial consisting of a single variable.
    pub fn var(index: u32) -> Self {
        Monomial {
            exps: vec![(index, 1)],
        }
    }

    /// Builds a monomial from (variable, exponent) pairs; zero exponents are
    /// dropped and repeated variables are combined.
    pub fn from_pairs<I: IntoIterator<Item = (u32, i32)>>(pairs: I) -> Self {
        let mut exps: Vec<(u32, i32)> = Vec::new();
        for (v, e) in pairs {
            if e == 0 {
                continue;
            }
            match exps.binary_search_by_key(&v, |&(w, _)| w) {
                Ok(pos) => {
                    exps[pos].1 += e;
                    if exps[pos].1 == 0 {
                        exps.remove(pos);
                    }
                }
                Err(pos) => exps.insert(pos, (v, e)),
            }
        }
        Monomial { exps }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    /// Exponent of the given variable (zero if absent).
    pub fn exp(&self, index: u32) -> i32 {
        self.exps
            .binary_search_by_key(&index, |&(v, _)| v)
            .map(|pos| self.exps[pos].1)
            .unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, i32)> + '_ {
        self.exps.iter().copied()
    }

    /// Variables occurring with nonzero exponent, in increasing index order.
    pub fn support(&self) -> impl Iterator<Item = u32> + '_ {
        self.exps.iter().map(|&(v, _)| v)
    }

    /// Sum of all exponents.
    pub fn total_degree(&self) -> i64 {
        self.exps.iter().map(|&(_, e)| e as i64).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial::from_pairs(self.iter().chain(other.iter()))
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial::from_pairs(self.iter().map(|(v, e)| (v, e * k as i32)))
    }

    /// Divides by `other` when every exponent of `other` is covered.
    pub fn try_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.exps.len());
        let mut rhs = other.exps.iter().peekable();
        for &(v, e) in &self.exps {
            let mut e = e;
            if let Some(&&(w, f)) = rhs.peek() {
                if w < v {
                    return None; // other has a variable we lack
                }
                if w == v {
                    e -= f;
                    rhs.next();
                }
            }
            if e < 0 {
                return None;
            }
            if e != 0 {
                out.push((v, e));
            }
        }
        if rhs.next().is_some() {
            return None;
        }
        Some(Monomial { exps: out })
    }
}

/// Graded lexicographic order: first by total degree, then lexicographically
/// with earlier variables weighing more (a higher exponent on a
/// lower-indexed variable wins ties).
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.total_degree().cmp(&other.total_degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let mut a = self.exps.iter().peekable();
        let mut b = other.exps.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => return Ordering::Equal,
                (Some(&&(va, ea)), Some(&&(vb, eb))) => {
                    if va == vb {
                        match ea.cmp(&eb) {
                            Ordering::Equal => {
                                a.next();
                                b.next();
                            }
                            ord => return ord,
                        }
                    } else if va < vb {
                        // self has a nonzero exponent on an earlier variable
                        return if ea > 0 { Ordering::Greater } else { Ordering::Less };
                    } else {
                        return if eb > 0 { Ordering::Less } else { Ordering::Greater };
                    }
                }
                (Some(&&(_, ea)), None) => {
                    return if ea > 0 { Ordering::Greater } else { Ordering::Less }
                }
                (None, Some(&&(_, eb))) => {
                    return if eb > 0 { Ordering::Less } else { Ordering::Greater }
                }
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Rendering order: total degree ascending, then variables in reading order
/// (`u1` before `u2` within a degree).
pub fn display_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    a.total_degree()
        .cmp(&b.total_degree())
        .then_with(|| b.cmp(a))
}
