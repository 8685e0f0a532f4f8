//! Closed torus, where classes are homology pairs `(m, l)` and the minimal
//! intersection number is the absolute determinant.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TorusClass {
    pub m: i64,
    pub l: i64,
}

impl TorusClass {
    pub fn new(m: i64, l: i64) -> Self {
        TorusClass { m, l }
    }
}

/// `|m₁·l₂ − l₁·m₂|`, exact for all `i64` inputs.
pub fn torus_min_intersection(c1: TorusClass, c2: TorusClass) -> u128 {
    let det = c1.m as i128 * c2.l as i128 - c1.l as i128 * c2.m as i128;
    det.unsigned_abs()
}

impl FromStr for TorusClass {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let trimmed = text.trim();
        let inner = trimmed
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| Error::parse(0, "expected a torus class \"(m,l)\""))?;
        let (m, l) = inner
            .split_once(',')
            .ok_or_else(|| Error::parse(1, "expected a comma between m and l"))?;
        let number = |part: &str, at: usize| {
            part.trim()
                .parse::<i64>()
                .map_err(|e| Error::parse(at, format!("bad integer {:?}: {e}", part.trim())))
        };
        Ok(TorusClass {
            m: number(m, 1)?,
            l: number(l, 2 + m.len())?,
        })
    }
}

impl fmt::Display for TorusClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.m, self.l)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(text: &str) -> TorusClass {
        text.parse().unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(torus_min_intersection(t("(1,0)"), t("(0,1)")), 1);
        assert_eq!(torus_min_intersection(t("(2,4)"), t("(1,2)")), 0);
        assert_eq!(torus_min_intersection(t("(2,3)"), t("(1,1)")), 1);
        assert_eq!(torus_min_intersection(t("( -3 , 5 )"), t("(0,0)")), 0);
    }

    #[test]
    fn no_overflow_at_extremes() {
        let big = TorusClass::new(i64::MIN, i64::MAX);
        let other = TorusClass::new(i64::MAX, i64::MIN);
        let expected = (i64::MIN as i128 * i64::MIN as i128 - i64::MAX as i128 * i64::MAX as i128)
            .unsigned_abs();
        assert_eq!(torus_min_intersection(big, other), expected);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            "2,3".parse::<TorusClass>(),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            "(2;3)".parse::<TorusClass>(),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            "(2,x)".parse::<TorusClass>(),
            Err(Error::Parse { position: 3, .. })
        ));
        assert_eq!(t("(2,-3)").to_string(), "(2,-3)");
    }
}
