//! Endofunctions on a finite ordered set, stored as image tables.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A function `f : {0,…,n−1} → {0,…,n−1}` stored as its image sequence
/// `(f(0), …, f(n−1))`.
///
/// The text form is `N:i0,i1,...,i{N-1}`, e.g. `8:1,0,0,3,5,6,7,4`;
/// whitespace between tokens is ignored when parsing.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FunctionTable {
    images: Vec<usize>,
}

impl FunctionTable {
    /// Builds a table from an image sequence, validating every entry.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::EmptyDomain);
        }
        for (index, &value) in images.iter().enumerate() {
            if value >= n {
                return Err(Error::ImageOutOfRange { index, value, n });
            }
        }
        Ok(FunctionTable { images })
    }

    /// Domain size.
    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// The image sequence `(f(0), …, f(n−1))`.
    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `f(x)`.
    pub fn apply(&self, x: usize) -> Result<usize> {
        if x >= self.n() {
            return Err(Error::PointOutOfRange { x, n: self.n() });
        }
        Ok(self.images[x])
    }

    /// `f^steps(x0)`; `steps = 0` returns `x0`.
    ///
    /// Large step counts are folded through the eventual cycle, so this is
    /// O(n) regardless of `steps`.
    pub fn iterate(&self, x0: usize, steps: u64) -> Result<usize> {
        let n = self.n();
        if x0 >= n {
            return Err(Error::PointOutOfRange { x: x0, n });
        }
        let mut first_visit = vec![u64::MAX; n];
        let mut x = x0;
        let mut t = 0u64;
        while t < steps {
            if first_visit[x] != u64::MAX {
                // x repeats with period t − first_visit[x]; finish modulo that.
                let lambda = t - first_visit[x];
                let remaining = (steps - t) % lambda;
                for _ in 0..remaining {
                    x = self.images[x];
                }
                return Ok(x);
            }
            first_visit[x] = t;
            x = self.images[x];
            t += 1;
        }
        Ok(x)
    }
}

impl fmt::Display for FunctionTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.n())?;
        for (i, v) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Scans one decimal unsigned integer starting at `pos`, skipping leading
/// whitespace; returns (value, next position). Shared by the literal parsers.
pub(crate) fn scan_usize(bytes: &[u8], mut pos: usize, what: &str) -> Result<(usize, usize)> {
    while pos < bytes.len() && bytes[pos].is_ascii_whitespace() {
        pos += 1;
    }
    let start = pos;
    let mut value: usize = 0;
    while pos < bytes.len() && bytes[pos].is_ascii_digit() {
        value = value
            .checked_mul(10)
            .and_then(|v| v.checked_add((bytes[pos] - b'0') as usize))
            .ok_or_else(|| Error::Parse {
                at: start,
                msg: format!("{what} overflows a machine integer"),
            })?;
        pos += 1;
    }
    if pos == start {
        return Err(Error::Parse { at: pos, msg: format!("expected {what}") });
    }
    Ok((value, pos))
}

/// Skips whitespace and expects the byte `expected` at the cursor.
pub(crate) fn expect_byte(bytes: &[u8], mut pos: usize, expected: u8) -> Result<usize> {
    while pos < bytes.len() && bytes[pos].is_ascii_whitespace() {
        pos += 1;
    }
    if pos < bytes.len() && bytes[pos] == expected {
        Ok(pos + 1)
    } else {
        Err(Error::Parse { at: pos, msg: format!("expected '{}'", expected as char) })
    }
}

pub(crate) fn skip_ws(bytes: &[u8], mut pos: usize) -> usize {
    while pos < bytes.len() && bytes[pos].is_ascii_whitespace() {
        pos += 1;
    }
    pos
}

impl FromStr for FunctionTable {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bytes = s.as_bytes();
        let (n, pos) = scan_usize(bytes, 0, "domain size")?;
        let mut pos = expect_byte(bytes, pos, b':')?;
        if n == 0 {
            return Err(Error::Parse { at: 0, msg: "domain size must be at least 1".into() });
        }
        let mut images = Vec::with_capacity(n);
        for i in 0..n {
            if i > 0 {
                pos = expect_byte(bytes, pos, b',')?;
            }
            let at = skip_ws(bytes, pos);
            let (value, next) = scan_usize(bytes, pos, "image entry")?;
            if value >= n {
                return Err(Error::Parse {
                    at,
                    msg: format!("image {value} at position {i} is outside the domain 0..{n}"),
                });
            }
            images.push(value);
            pos = next;
        }
        let pos = skip_ws(bytes, pos);
        if pos != bytes.len() {
            return Err(Error::Parse {
                at: pos,
                msg: format!("trailing input (expected exactly {n} entries)"),
            });
        }
        FunctionTable::new(images)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn new_validates_entries() {
        assert!(FunctionTable::new(vec![]).is_err());
        assert!(FunctionTable::new(vec![3]).is_err());
        assert!(FunctionTable::new(vec![0, 1, 2]).is_ok());
    }

    #[test]
    fn literal_round_trip() {
        let f: FunctionTable = "11:6,3,2,5,8,10,9,4,7,6,5".parse().unwrap();
        assert_eq!(f.images(), &[6, 3, 2, 5, 8, 10, 9, 4, 7, 6, 5]);
        assert_eq!(f.to_string(), "11:6,3,2,5,8,10,9,4,7,6,5");
        let again: FunctionTable = f.to_string().parse().unwrap();
        assert_eq!(f, again);
    }

    #[test]
    fn literal_tolerates_whitespace() {
        let f: FunctionTable = " 3 : 0 , 1 , 2 ".parse().unwrap();
        assert_eq!(f.images(), &[0, 1, 2]);
    }

    #[test]
    fn parse_errors_carry_positions() {
        let err = "3:0,1".parse::<FunctionTable>().unwrap_err();
        match err {
            Error::Parse { at, .. } => assert_eq!(at, 5),
            other => panic!("expected parse error, got {other:?}"),
        }
        let err = "3:0,1,9".parse::<FunctionTable>().unwrap_err();
        match err {
            Error::Parse { at, .. } => assert_eq!(at, 6),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!("x".parse::<FunctionTable>().is_err());
        assert!("3:0,1,2,0".parse::<FunctionTable>().is_err());
    }

    #[test]
    fn iterate_small_steps() {
        let f: FunctionTable = "11:6,3,2,5,8,10,9,4,7,6,5".parse().unwrap();
        assert_eq!(f.iterate(0, 0).unwrap(), 0);
        assert_eq!(f.iterate(0, 1).unwrap(), 6);
        assert_eq!(f.iterate(0, 2).unwrap(), 9);
        assert!(f.iterate(11, 1).is_err());
    }

    #[test]
    fn iterate_folds_through_the_cycle() {
        let f: FunctionTable = "8:1,0,0,3,5,6,7,4".parse().unwrap();
        assert_eq!(f.iterate(4, 4).unwrap(), 4);
        assert_eq!(f.iterate(4, 4_000_000_003).unwrap(), f.iterate(4, 3).unwrap());
        // 2 is a tail point: 2 → 0 → 1 → 0 → …
        assert_eq!(f.iterate(2, 1).unwrap(), 0);
        assert_eq!(f.iterate(2, 1_000_000_001).unwrap(), 0);
        assert_eq!(f.iterate(2, 1_000_000_002).unwrap(), 1);
    }
}
