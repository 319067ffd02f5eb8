//! Labels of Specht and simple modules of `H_q(D_n)`: unordered pairs
//! `{λ⁽¹⁾, λ⁽²⁾}` with `λ⁽¹⁾ ≠ λ⁽²⁾`, and the two halves `(β|β)±` of a
//! restricted module with equal components.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::combinatorics::{partitions, Bipartition, Partition};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DnLabel {
    /// Canonical representative: larger size first; at equal sizes the
    /// lexicographically larger partition first, and never equal.
    Pair(Partition, Partition),
    SplitPlus(Partition),
    SplitMinus(Partition),
}

impl DnLabel {
    /// The canonical label of the unordered pair `{x, y}`.
    pub fn pair(x: Partition, y: Partition) -> Result<Self> {
        if x == y {
            return Err(Error::InvalidInput(format!(
                "({x}|{x}) splits on restriction; use the labels ({x}|{x})+ and ({x}|{x})-"
            )));
        }
        let key = |p: &Partition| (p.size(), p.clone());
        Ok(if key(&x) > key(&y) {
            DnLabel::Pair(x, y)
        } else {
            DnLabel::Pair(y, x)
        })
    }

    /// The size of the larger component (`a ≥ n − a`).
    pub fn a(&self) -> usize {
        match self {
            DnLabel::Pair(x, _) => x.size(),
            DnLabel::SplitPlus(b) | DnLabel::SplitMinus(b) => b.size(),
        }
    }

    pub fn size(&self) -> usize {
        match self {
            DnLabel::Pair(x, y) => x.size() + y.size(),
            DnLabel::SplitPlus(b) | DnLabel::SplitMinus(b) => 2 * b.size(),
        }
    }

    pub fn is_split(&self) -> bool {
        !matches!(self, DnLabel::Pair(..))
    }

    /// The partition of a split label.
    pub fn split_partition(&self) -> Option<&Partition> {
        match self {
            DnLabel::Pair(..) => None,
            DnLabel::SplitPlus(b) | DnLabel::SplitMinus(b) => Some(b),
        }
    }

    /// `(β|β)+ ↔ (β|β)−`; pairs are fixed.
    pub fn swap_sign(&self) -> Self {
        match self {
            DnLabel::Pair(..) => self.clone(),
            DnLabel::SplitPlus(b) => DnLabel::SplitMinus(b.clone()),
            DnLabel::SplitMinus(b) => DnLabel::SplitPlus(b.clone()),
        }
    }

    /// True if the label indexes a simple module at `e`.
    pub fn is_e_restricted(&self, e: usize) -> bool {
        match self {
            DnLabel::Pair(x, y) => x.is_e_restricted(e) && y.is_e_restricted(e),
            DnLabel::SplitPlus(b) | DnLabel::SplitMinus(b) => b.is_e_restricted(e),
        }
    }
}

/// Pair labels with first component of size `a` (`a > n − a`), or with
/// `a = n − a`, in lexicographically descending order of `(λ⁽¹⁾, λ⁽²⁾)`.
pub fn pair_labels(n: usize, a: usize) -> Vec<DnLabel> {
    assert!(
        2 * a >= n && a <= n,
        "a = {a} is not the larger part of n = {n}"
    );
    let seconds = partitions(n - a);
    let mut out = Vec::new();
    for x in partitions(a) {
        for y in &seconds {
            if 2 * a > n || x > *y {
                out.push(DnLabel::Pair(x.clone(), y.clone()));
            }
        }
    }
    out
}

/// `(β|β)+, (β|β)−` for every `β ⊢ m`, `β` lexicographically descending.
pub fn split_labels(m: usize) -> Vec<DnLabel> {
    partitions(m)
        .into_iter()
        .flat_map(|b| [DnLabel::SplitPlus(b.clone()), DnLabel::SplitMinus(b)])
        .collect()
}

/// Every label for `n`, grouped by `a` from `n` down to `⌈n/2⌉`.
pub fn all_labels(n: usize) -> Vec<DnLabel> {
    let mut out = Vec::new();
    for a in (n.div_ceil(2)..=n).rev() {
        out.extend(pair_labels(n, a));
        if 2 * a == n {
            out.extend(split_labels(a));
        }
    }
    out
}

impl fmt::Display for DnLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DnLabel::Pair(x, y) => write!(f, "({x}|{y})"),
            DnLabel::SplitPlus(b) => write!(f, "({b}|{b})+"),
            DnLabel::SplitMinus(b) => write!(f, "({b}|{b})-"),
        }
    }
}

impl fmt::Debug for DnLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for DnLabel {
    type Err = Error;

    /// Accepts `([3]|[2,1])` (either order) and `([2,1]|[2,1])±`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let (body, sign) = match t.chars().last() {
            Some('+') => (&t[..t.len() - 1], Some(true)),
            Some('-') => (&t[..t.len() - 1], Some(false)),
            _ => (t, None),
        };
        let bp: Bipartition = body.parse()?;
        match sign {
            None => DnLabel::pair(bp.first, bp.second),
            Some(plus) if bp.first == bp.second => Ok(if plus {
                DnLabel::SplitPlus(bp.first)
            } else {
                DnLabel::SplitMinus(bp.first)
            }),
            Some(_) => Err(Error::Parse(format!(
                "split label {s:?} needs equal components"
            ))),
        }
    }
}

impl Serialize for DnLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for DnLabel {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn canonical_pairs() {
        let l = DnLabel::pair(p("[1]"), p("[2]")).unwrap();
        assert_eq!(l, DnLabel::Pair(p("[2]"), p("[1]")));
        let l = DnLabel::pair(p("[1,1]"), p("[2]")).unwrap();
        assert_eq!(l.to_string(), "([2]|[1,1])");
        assert!(DnLabel::pair(p("[2]"), p("[2]")).is_err());
    }

    #[test]
    fn parse_round_trip() {
        for n in 1..=6 {
            for l in all_labels(n) {
                assert_eq!(l.to_string().parse::<DnLabel>().unwrap(), l);
            }
        }
        assert_eq!(
            "([1,1]|[2])".parse::<DnLabel>().unwrap().to_string(),
            "([2]|[1,1])"
        );
        assert!("([2]|[1,1])+".parse::<DnLabel>().is_err());
        assert_eq!(
            "([2,1]|[2,1])-".parse::<DnLabel>().unwrap(),
            DnLabel::SplitMinus(p("[2,1]"))
        );
    }

    #[test]
    fn label_counts() {
        // even n: (Σ_a p(a)p(n−a) − p(m))/2 + 2p(m); n = 4: (20 − 2)/2 + 4 = 13
        assert_eq!(all_labels(4).len(), 13);
        assert_eq!(all_labels(2).len(), 2 + 2);
        // odd n: Σ_{a > n/2} p(a)p(n−a); n = 3: p(3) + p(2)p(1) = 5
        assert_eq!(all_labels(3).len(), 5);
        let labels = all_labels(6);
        let mut sorted = labels.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), labels.len());
    }
}
