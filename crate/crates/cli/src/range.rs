use std::fmt;
use std::str::FromStr;

/// Inclusive integer range written `lo..hi`, `lo..=hi` or a single `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IntRange {
    pub lo: i64,
    pub hi: i64,
}

impl FromStr for IntRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let num = |t: &str| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| format!("{t:?} is not an integer"))
        };
        let (lo, hi) = match s.split_once("..") {
            Some((lo, hi)) => (num(lo)?, num(hi.strip_prefix('=').unwrap_or(hi))?),
            None => {
                let k = num(s)?;
                (k, k)
            }
        };
        if lo > hi {
            return Err(format!("empty range {lo}..{hi}"));
        }
        Ok(IntRange { lo, hi })
    }
}

impl fmt::Display for IntRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn forms() {
        assert_eq!("3..9".parse(), Ok(IntRange { lo: 3, hi: 9 }));
        assert_eq!("3..=9".parse(), Ok(IntRange { lo: 3, hi: 9 }));
        assert_eq!("7".parse(), Ok(IntRange { lo: 7, hi: 7 }));
        assert!("9..3".parse::<IntRange>().is_err());
        assert!("a..3".parse::<IntRange>().is_err());
    }
}
