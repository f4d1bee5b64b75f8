//! Classical groups, branching pairs and dominant weights.
//!
//! Group sizes follow the usual naming: `GL(n)` stores `n`, `Sp(2n)` stores
//! `2n` and `SO(p)` stores `p`. A size of zero (and `SO(1)`) denotes the
//! trivial group of rank zero, which is only meaningful as a subgroup.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    GL,
    Sp,
    SO,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::GL => "GL",
            Family::Sp => "Sp",
            Family::SO => "SO",
        })
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "GL" => Ok(Family::GL),
            "SP" => Ok(Family::Sp),
            "SO" => Ok(Family::SO),
            other => Err(Error::Parse(format!("unknown group family '{other}'"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ClassicalGroup {
    family: Family,
    size: u32,
}

impl ClassicalGroup {
    pub fn new(family: Family, size: u32) -> Result<Self> {
        if size == 0 {
            return Err(Error::InvalidGroup {
                family,
                size,
                reason: "size must be positive",
            });
        }
        if family == Family::Sp && !size.is_multiple_of(2) {
            return Err(Error::InvalidGroup {
                family,
                size,
                reason: "symplectic groups have even size",
            });
        }
        Ok(Self { family, size })
    }

    /// The rank-zero group `GL(0)`, `Sp(0)` or `SO(0)`.
    pub fn trivial(family: Family) -> Self {
        Self { family, size: 0 }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn size(&self) -> u32 {
        self.size
    }

    pub fn rank(&self) -> usize {
        match self.family {
            Family::GL => self.size as usize,
            Family::Sp | Family::SO => (self.size / 2) as usize,
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.rank() == 0
    }

    /// `SO(2n+1)`, whose Weyl vector has half-integer coordinates.
    pub fn is_odd_orthogonal(&self) -> bool {
        self.family == Family::SO && self.size % 2 == 1
    }

    /// `SO(2n)` with `n >= 1`.
    pub fn is_even_orthogonal(&self) -> bool {
        self.family == Family::SO && self.size.is_multiple_of(2) && self.size > 0
    }
}

impl fmt::Display for ClassicalGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.family, self.size)
    }
}

impl FromStr for ClassicalGroup {
    type Err = Error;

    /// Parses `GL:3`, `Sp:6`, `SO:7`. A size of `0` gives the trivial group.
    fn from_str(s: &str) -> Result<Self> {
        let (family, size) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("expected FAMILY:SIZE, got '{s}'")))?;
        let family: Family = family.parse()?;
        let size: u32 = size
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad group size '{size}'")))?;
        if size == 0 {
            Ok(Self::trivial(family))
        } else {
            Self::new(family, size)
        }
    }
}

/// A subgroup chain `small ⊂ big` within one family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BranchPair {
    big: ClassicalGroup,
    small: ClassicalGroup,
    delta: usize,
    r: usize,
    l: usize,
}

impl BranchPair {
    pub fn new(big: ClassicalGroup, small: ClassicalGroup) -> Result<Self> {
        if big.family != small.family {
            return Err(Error::FamilyMismatch {
                big: big.family,
                small: small.family,
            });
        }
        if big.is_trivial() || small.size >= big.size {
            return Err(Error::SizeOrder {
                big: big.to_string(),
                small: small.to_string(),
            });
        }
        let n = big.rank();
        let m = small.rank();
        let (p, q) = (big.size as usize, small.size as usize);
        let delta = match big.family {
            Family::GL => n - m,
            Family::Sp => 2 * n - 2 * m,
            Family::SO => p - q,
        };
        // multiplicity of each restricted root ε_i among the non-subgroup roots
        let r = match big.family {
            Family::GL => n - m,
            Family::Sp => 2 * n - 2 * m,
            Family::SO if p % 2 == 1 => 2 * n + 1 - q,
            Family::SO => 2 * n - q,
        };
        let l = match big.family {
            Family::SO if p % 2 == 1 => n - m,
            Family::SO => n - m - 1,
            _ => 0,
        };
        Ok(Self {
            big,
            small,
            delta,
            r,
            l,
        })
    }

    pub fn big(&self) -> ClassicalGroup {
        self.big
    }

    pub fn small(&self) -> ClassicalGroup {
        self.small
    }

    pub fn family(&self) -> Family {
        self.big.family
    }

    /// Index gap in the interlacing inequalities `λ_i ≥ μ_i ≥ λ_{i+delta}`.
    pub fn delta(&self) -> usize {
        self.delta
    }

    pub fn r(&self) -> usize {
        self.r
    }

    /// Power-of-two exponent in front of the orthogonal determinant.
    pub fn l(&self) -> usize {
        self.l
    }

    /// Rank of the big group.
    pub fn n(&self) -> usize {
        self.big.rank()
    }

    /// Rank of the subgroup.
    pub fn m(&self) -> usize {
        self.small.rank()
    }
}

impl fmt::Display for BranchPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.big, self.small)
    }
}

impl FromStr for BranchPair {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (big, small) = s
            .split_once('/')
            .ok_or_else(|| Error::Parse(format!("expected BIG/SMALL, got '{s}'")))?;
        BranchPair::new(big.parse()?, small.parse()?)
    }
}

/// A highest weight `λ_1 ≥ … ≥ λ_rank ≥ 0`. Indices past the rank read as zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DominantWeight {
    parts: Vec<i64>,
}

impl DominantWeight {
    pub fn new(group: &ClassicalGroup, parts: Vec<i64>) -> Result<Self> {
        if parts.len() != group.rank() {
            return Err(Error::WrongLength {
                expected: group.rank(),
                got: parts.len(),
            });
        }
        Self::from_parts(parts)
    }

    /// Validates dominance only; the caller is responsible for the length.
    pub fn from_parts(parts: Vec<i64>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotDominant {
                parts,
                reason: "parts must be non-increasing",
            });
        }
        if parts.last().is_some_and(|&x| x < 0) {
            return Err(Error::NotDominant {
                parts,
                reason: "parts must be non-negative",
            });
        }
        Ok(Self { parts })
    }

    pub fn zero(group: &ClassicalGroup) -> Self {
        Self {
            parts: vec![0; group.rank()],
        }
    }

    pub fn parts(&self) -> &[i64] {
        &self.parts
    }

    pub fn rank(&self) -> usize {
        self.parts.len()
    }

    /// One-based padded access: `λ_i` for `i ≥ 1`, zero past the rank.
    pub fn get(&self, i: usize) -> i64 {
        debug_assert!(i >= 1);
        self.parts.get(i.wrapping_sub(1)).copied().unwrap_or(0)
    }

    /// Largest `s` with `λ_s ≠ 0`.
    pub fn length(&self) -> usize {
        self.parts.iter().take_while(|&&x| x != 0).count()
    }

    pub fn is_zero(&self) -> bool {
        self.parts.iter().all(|&x| x == 0)
    }

    pub fn check_rank(&self, group: &ClassicalGroup) -> Result<()> {
        if self.rank() != group.rank() {
            return Err(Error::WrongLength {
                expected: group.rank(),
                got: self.rank(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// Parses a comma-separated integer list such as `2,1,0`. The empty string
/// is the empty list.
pub fn parse_parts(s: &str) -> Result<Vec<i64>> {
    let s = s.trim().trim_start_matches('(').trim_end_matches(')');
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|x| {
            x.trim()
                .parse::<i64>()
                .map_err(|_| Error::Parse(format!("bad weight entry '{x}'")))
        })
        .collect()
}
