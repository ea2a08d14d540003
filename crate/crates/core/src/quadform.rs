//! Representations by the ternary form `x² + 2y² + 2z²`.
//!
//! A triangular number `h(h+1)/2` equals `m(m+1)/2 + r(r+1) + s(s+1)`
//! exactly when `(2h+1)² + 4 = (2m+1)² + 2(2r+1)² + 2(2s+1)²`, which ties
//! extra 4-cores of triangular size to odd representations of
//! `(2h+1)² + 4`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// True iff `n = 4^a (8b + 7)` for some `a, b >= 0`.
pub fn is_dickson_excluded(mut n: u64) -> bool {
    if n == 0 {
        return false;
    }
    while n.is_multiple_of(4) {
        n /= 4;
    }
    n % 8 == 7
}

fn exact_sqrt(v: u64) -> Option<u64> {
    let r = v.isqrt();
    (r * r == v).then_some(r)
}

/// Lexicographically smallest non-negative `(x, y, z)` with
/// `x² + 2y² + 2z² = n`, or `None` when `n` is not represented.
pub fn represent_ternary(n: u64) -> Option<(u64, u64, u64)> {
    (0..=n.isqrt()).find_map(|x| {
        let rest = n - x * x;
        if !rest.is_multiple_of(2) {
            return None;
        }
        let half = rest / 2;
        (0..=half.isqrt()).find_map(|y| exact_sqrt(half - y * y).map(|z| (x, y, z)))
    })
}

/// Every non-negative `(x, y, z)` with `x² + 2y² + 2z² = n`, in
/// lexicographic order.
pub fn all_ternary_representations(n: u64) -> Vec<(u64, u64, u64)> {
    let mut out = Vec::new();
    for x in 0..=n.isqrt() {
        let rest = n - x * x;
        if !rest.is_multiple_of(2) {
            continue;
        }
        let half = rest / 2;
        for y in 0..=half.isqrt() {
            if let Some(z) = exact_sqrt(half - y * y) {
                out.push((x, y, z));
            }
        }
    }
    out
}

/// `(2h+1)² + 4 = x² + 2y² + 2z²` with `x, y, z` odd, together with the
/// triangular decomposition `x = 2m+1`, `y = 2r+1`, `z = 2s+1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OddRepresentation {
    pub h: u64,
    pub x: u64,
    pub y: u64,
    pub z: u64,
    pub m: u64,
    pub r: u64,
    pub s: u64,
}

impl OddRepresentation {
    /// `(2h+1)² + 4`.
    pub fn target(h: u64) -> u64 {
        (2 * h + 1).pow(2) + 4
    }

    /// Checks every invariant of the record.
    pub fn is_valid(&self) -> bool {
        let odd = [self.x, self.y, self.z].iter().all(|v| v % 2 == 1);
        let linked =
            self.x == 2 * self.m + 1 && self.y == 2 * self.r + 1 && self.z == 2 * self.s + 1;
        let form =
            Self::target(self.h) == self.x * self.x + 2 * self.y * self.y + 2 * self.z * self.z;
        let triangular = self.h * (self.h + 1) / 2
            == self.m * (self.m + 1) / 2 + self.r * (self.r + 1) + self.s * (self.s + 1);
        odd && linked && form && triangular
    }

    /// Whether this is the representation `x = 2h+1, y = z = 1`, which every
    /// `h` has and which corresponds to the staircase alone.
    pub fn is_staircase(&self) -> bool {
        self.r == 0 && self.s == 0
    }
}

/// The lexicographically smallest odd representation of `(2h+1)² + 4`.
///
/// The smallest `x` is tried first, so the result is the staircase
/// representation only when no other exists.
pub fn odd_representation(h: u64) -> Result<OddRepresentation> {
    if h < 2 {
        return Err(Error::Domain(format!(
            "odd representations need h >= 2, got {h}"
        )));
    }
    let n = OddRepresentation::target(h);
    let found = (1..=n.isqrt()).step_by(2).find_map(|x| {
        let half = (n - x * x) / 2;
        (1..=half.isqrt()).step_by(2).find_map(|y| {
            exact_sqrt(half - y * y)
                .filter(|z| z % 2 == 1)
                .map(|z| (x, y, z))
        })
    });
    let (x, y, z) =
        found.ok_or_else(|| Error::Domain(format!("no odd representation of {n} (h = {h})")))?;
    Ok(OddRepresentation {
        h,
        x,
        y,
        z,
        m: (x - 1) / 2,
        r: (y - 1) / 2,
        s: (z - 1) / 2,
    })
}

/// Number of `(m, r, s)` with `m(m+1)/2 + r(r+1) + s(s+1) = n`, counting
/// no further than `cap`.
pub fn triple_triangular_count(n: u64, cap: u64) -> u64 {
    let mut count = 0;
    let mut r = 0;
    while r * (r + 1) <= n {
        let mut s = 0;
        while r * (r + 1) + s * (s + 1) <= n {
            let rest = n - r * (r + 1) - s * (s + 1);
            if exact_sqrt(8 * rest + 1).is_some() {
                count += 1;
                if count >= cap {
                    return count;
                }
            }
            s += 1;
        }
        r += 1;
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dickson_examples() {
        assert!(is_dickson_excluded(7));
        assert!(is_dickson_excluded(28));
        assert!(!is_dickson_excluded(29));
        assert!(is_dickson_excluded(15));
        assert!(!is_dickson_excluded(14));
        assert!(is_dickson_excluded(112));
    }

    #[test]
    fn ternary_examples() {
        assert_eq!(represent_ternary(29), Some((3, 1, 3)));
        assert_eq!(represent_ternary(7), None);
        assert_eq!(represent_ternary(1), Some((1, 0, 0)));
        assert_eq!(represent_ternary(2), Some((0, 0, 1)));
    }

    #[test]
    fn odd_examples() {
        let rep = odd_representation(2).unwrap();
        assert_eq!((rep.x, rep.y, rep.z), (3, 1, 3));
        assert_eq!((rep.m, rep.r, rep.s), (1, 0, 1));
        assert!(rep.is_valid());
        assert!(!rep.is_staircase());

        let rep = odd_representation(3).unwrap();
        assert_eq!(OddRepresentation::target(3), 53);
        assert!(rep.is_valid());
        assert!(odd_representation(1).is_err());
    }

    #[test]
    fn all_representations_agree_with_first() {
        for n in 1..300 {
            let all = all_ternary_representations(n);
            assert_eq!(all.first().copied(), represent_ternary(n), "n={n}");
        }
    }

    #[test]
    fn triple_counts() {
        assert_eq!(triple_triangular_count(0, u64::MAX), 1);
        assert_eq!(triple_triangular_count(3, u64::MAX), 3);
        assert_eq!(triple_triangular_count(3, 2), 2);
    }
}
