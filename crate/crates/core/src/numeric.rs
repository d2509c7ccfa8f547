//! Exact arithmetic on finite sets of non-negative integers.
//!
//! A [`SetLabel`] is the value carried by every vertex and edge of a labeled
//! graph. Edge labels are sumsets of their endpoint labels, and the arithmetic
//! classes are defined in terms of [`ap_of`] and [`deterministic_index`].
//!
//! All arithmetic is checked; an operation that would leave `u64` reports
//! [`NumericError::Overflow`] instead of wrapping.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumericError {
    #[error("a set label must contain at least one element")]
    Empty,
    #[error("set label elements must be strictly increasing (saw {prev} then {next})")]
    NotIncreasing { prev: u64, next: u64 },
    #[error("progression length must be at least 1")]
    ZeroLength,
    #[error("common difference must be at least 1")]
    ZeroDifference,
    #[error("integer overflow while computing a set label")]
    Overflow,
    #[error("set {0} is not an arithmetic progression")]
    NotAp(SetLabel),
}

/// A nonempty, strictly increasing set of non-negative integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct SetLabel(Vec<u64>);

impl SetLabel {
    /// Builds a label from elements that are already strictly increasing.
    pub fn new(elements: Vec<u64>) -> Result<Self, NumericError> {
        if elements.is_empty() {
            return Err(NumericError::Empty);
        }
        if let Some(w) = elements.windows(2).find(|w| w[0] >= w[1]) {
            return Err(NumericError::NotIncreasing {
                prev: w[0],
                next: w[1],
            });
        }
        Ok(SetLabel(elements))
    }

    /// Builds a label from arbitrary elements, sorting and deduplicating.
    pub fn from_unsorted<I: IntoIterator<Item = u64>>(elements: I) -> Result<Self, NumericError> {
        let mut v: Vec<u64> = elements.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        SetLabel::new(v)
    }

    pub fn singleton(x: u64) -> Self {
        SetLabel(vec![x])
    }

    pub fn elements(&self) -> &[u64] {
        &self.0
    }

    /// The set-indexing number.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn smallest(&self) -> u64 {
        self.0[0]
    }

    pub fn largest(&self) -> u64 {
        self.0[self.0.len() - 1]
    }

    pub fn contains(&self, x: u64) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    /// Shifts every element up by `t`. Translation preserves AP structure and
    /// the deterministic index.
    pub fn translate(&self, t: u64) -> Result<SetLabel, NumericError> {
        let shifted = self
            .0
            .iter()
            .map(|&x| x.checked_add(t).ok_or(NumericError::Overflow))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(SetLabel(shifted))
    }

    /// Replaces the first element by `first`, keeping every gap.
    pub fn with_first(&self, first: u64) -> Result<SetLabel, NumericError> {
        let base = self.smallest();
        let shifted = self
            .0
            .iter()
            .map(|&x| first.checked_add(x - base).ok_or(NumericError::Overflow))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(SetLabel(shifted))
    }
}

impl TryFrom<Vec<u64>> for SetLabel {
    type Error = NumericError;

    fn try_from(v: Vec<u64>) -> Result<Self, Self::Error> {
        SetLabel::new(v)
    }
}

impl From<SetLabel> for Vec<u64> {
    fn from(s: SetLabel) -> Self {
        s.0
    }
}

impl fmt::Display for SetLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}

/// Canonical form `(first, diff, len)` of an AP-set. `diff` is `None` exactly
/// when `len == 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ApDescriptor {
    pub first: u64,
    pub diff: Option<u64>,
    pub len: usize,
}

impl ApDescriptor {
    pub fn expand(&self) -> Result<SetLabel, NumericError> {
        match self.diff {
            None => Ok(SetLabel::singleton(self.first)),
            Some(d) => make_ap(self.first, d, self.len),
        }
    }
}

/// `{a, a+d, ..., a+(n-1)d}`.
pub fn make_ap(a: u64, d: u64, n: usize) -> Result<SetLabel, NumericError> {
    if n == 0 {
        return Err(NumericError::ZeroLength);
    }
    if d == 0 {
        return Err(NumericError::ZeroDifference);
    }
    let mut elements = Vec::with_capacity(n);
    let mut x = a;
    elements.push(x);
    for _ in 1..n {
        x = x.checked_add(d).ok_or(NumericError::Overflow)?;
        elements.push(x);
    }
    Ok(SetLabel(elements))
}

/// `A + B = {a + b : a in A, b in B}`.
pub fn sumset(a: &SetLabel, b: &SetLabel) -> Result<SetLabel, NumericError> {
    let mut sums = Vec::with_capacity(a.len() * b.len());
    for &x in a.elements() {
        for &y in b.elements() {
            sums.push(x.checked_add(y).ok_or(NumericError::Overflow)?);
        }
    }
    sums.sort_unstable();
    sums.dedup();
    Ok(SetLabel(sums))
}

/// Returns the AP descriptor of `a`, or `None` when the gaps are not all equal.
/// Singletons and pairs are always APs.
pub fn ap_of(a: &SetLabel) -> Option<ApDescriptor> {
    let e = a.elements();
    if e.len() == 1 {
        return Some(ApDescriptor {
            first: e[0],
            diff: None,
            len: 1,
        });
    }
    let d = e[1] - e[0];
    if e.windows(2).all(|w| w[1] - w[0] == d) {
        Some(ApDescriptor {
            first: e[0],
            diff: Some(d),
            len: e.len(),
        })
    } else {
        None
    }
}

/// Common difference of an AP-set; `Ok(None)` for singletons.
pub fn deterministic_index(a: &SetLabel) -> Result<Option<u64>, NumericError> {
    ap_of(a)
        .map(|ap| ap.diff)
        .ok_or_else(|| NumericError::NotAp(a.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[u64]) -> SetLabel {
        SetLabel::new(v.to_vec()).unwrap()
    }

    #[test]
    fn make_ap_examples() {
        assert_eq!(make_ap(2, 3, 3).unwrap(), set(&[2, 5, 8]));
        assert_eq!(make_ap(7, 5, 1).unwrap(), set(&[7]));
        assert_eq!(make_ap(0, 1, 4).unwrap(), set(&[0, 1, 2, 3]));
        assert_eq!(make_ap(0, 1, 0), Err(NumericError::ZeroLength));
        assert_eq!(make_ap(0, 0, 3), Err(NumericError::ZeroDifference));
        assert_eq!(make_ap(u64::MAX - 1, 2, 2), Err(NumericError::Overflow));
    }

    #[test]
    fn sumset_examples() {
        assert_eq!(
            sumset(&set(&[1, 2]), &set(&[3, 4])).unwrap(),
            set(&[4, 5, 6])
        );
        assert_eq!(
            sumset(&set(&[0]), &set(&[2, 5, 8])).unwrap(),
            set(&[2, 5, 8])
        );
        // Brute force: 1+2,1+6,1+10,3+2,3+6,3+10,5+2,5+6,5+10.
        let brute: Vec<u64> = {
            let mut v = vec![3, 7, 11, 5, 9, 13, 7, 11, 15];
            v.sort();
            v.dedup();
            v
        };
        assert_eq!(brute, vec![3, 5, 7, 9, 11, 13, 15]);
        assert_eq!(
            sumset(&set(&[1, 3, 5]), &set(&[2, 6, 10])).unwrap(),
            set(&brute)
        );
        assert_eq!(
            sumset(&set(&[u64::MAX]), &set(&[1])),
            Err(NumericError::Overflow)
        );
    }

    #[test]
    fn ap_detection() {
        assert_eq!(
            ap_of(&set(&[2, 5, 8, 11])),
            Some(ApDescriptor {
                first: 2,
                diff: Some(3),
                len: 4
            })
        );
        assert_eq!(ap_of(&set(&[1, 2, 4])), None);
        assert_eq!(
            ap_of(&set(&[3])),
            Some(ApDescriptor {
                first: 3,
                diff: None,
                len: 1
            })
        );
        assert_eq!(
            ap_of(&set(&[4, 9])),
            Some(ApDescriptor {
                first: 4,
                diff: Some(5),
                len: 2
            })
        );
    }

    #[test]
    fn deterministic_index_examples() {
        assert_eq!(deterministic_index(&set(&[0, 4, 8])), Ok(Some(4)));
        assert_eq!(deterministic_index(&set(&[9])), Ok(None));
        assert!(matches!(
            deterministic_index(&set(&[1, 2, 4])),
            Err(NumericError::NotAp(_))
        ));
    }

    #[test]
    fn rejects_bad_labels() {
        assert_eq!(SetLabel::new(vec![]), Err(NumericError::Empty));
        assert_eq!(
            SetLabel::new(vec![1, 1]),
            Err(NumericError::NotIncreasing { prev: 1, next: 1 })
        );
        assert!(serde_json::from_str::<SetLabel>("[3,2]").is_err());
        assert!(serde_json::from_str::<SetLabel>("[-1,2]").is_err());
        assert_eq!(serde_json::to_string(&set(&[0, 2, 4])).unwrap(), "[0,2,4]");
    }

    #[test]
    fn translate_and_rebase() {
        let a = set(&[1, 4, 7]);
        assert_eq!(a.translate(10).unwrap(), set(&[11, 14, 17]));
        assert_eq!(a.with_first(0).unwrap(), set(&[0, 3, 6]));
        assert_eq!(a.translate(u64::MAX), Err(NumericError::Overflow));
    }
}

#[cfg(test)]
mod props {
    use super::*;
    use proptest::prelude::*;

    fn label() -> impl Strategy<Value = SetLabel> {
        prop::collection::btree_set(0u64..60, 1..7)
            .prop_map(|s| SetLabel::new(s.into_iter().collect()).unwrap())
    }

    proptest! {
        #[test]
        fn sumset_commutes_and_is_bounded(a in label(), b in label()) {
            let ab = sumset(&a, &b).unwrap();
            prop_assert_eq!(&ab, &sumset(&b, &a).unwrap());
            prop_assert!(ab.len() >= a.len().max(b.len()));
            prop_assert!(ab.len() <= a.len() * b.len());
        }

        #[test]
        fn make_ap_round_trips(a in 0u64..1000, d in 1u64..50, n in 2usize..12) {
            let s = make_ap(a, d, n).unwrap();
            prop_assert_eq!(ap_of(&s), Some(ApDescriptor { first: a, diff: Some(d), len: n }));
            prop_assert_eq!(ap_of(&s).unwrap().expand().unwrap(), s);
        }

        #[test]
        fn ap_closure_law(a in 0u64..100, b in 0u64..100, d in 1u64..9, n in 1usize..8, m in 1usize..8, k_seed in 0usize..100) {
            let k = 1 + (k_seed % n) as u64;
            let sa = make_ap(a, d, n).unwrap();
            let sb = make_ap(b, k * d, m).unwrap();
            // Brute-force sumset, independent of `sumset`.
            let mut brute: Vec<u64> = sa.elements().iter()
                .flat_map(|x| sb.elements().iter().map(move |y| x + y))
                .collect();
            brute.sort_unstable();
            brute.dedup();
            prop_assert_eq!(brute.len(), n + k as usize * (m - 1));
            prop_assert!(brute.windows(2).all(|w| w[1] - w[0] == d));
            let s = sumset(&sa, &sb).unwrap();
            prop_assert_eq!(s.elements(), &brute[..]);
        }
    }
}
