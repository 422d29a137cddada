//! Canonical ASCII text format for interval sets.
//!
//! The empty set is `{}`. Otherwise components are joined by `|`, each
//! written `Llo,hiR` with `L` in `(`/`[` and `R` in `)`/`]`, for example
//! `(8/177,4/59)|(28/177,14/59)|(2/3,1)`. The parser accepts overlapping,
//! unordered or unreduced input and normalizes it.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::rational::parse_rational;
use crate::set::IntervalSet;

impl fmt::Display for IntervalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("{}");
        }
        for (i, c) in self.components().iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for IntervalSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_set(s)
    }
}

fn err(position: usize, message: impl Into<String>) -> Error {
    Error::Parse { position, message: message.into() }
}

pub fn parse_set(input: &str) -> Result<IntervalSet> {
    let trimmed = input.trim();
    if trimmed.is_empty() {
        return Err(err(0, "expected an interval set, found empty input"));
    }
    if let Some(inner) = trimmed.strip_prefix('{') {
        let offset = input.len() - input.trim_start().len();
        return match inner.strip_suffix('}') {
            Some(rest) if rest.trim().is_empty() => Ok(IntervalSet::empty()),
            _ => Err(err(offset, "only the empty set `{}` may use braces")),
        };
    }
    let mut pieces = Vec::new();
    let mut start = 0;
    for part in input.split('|') {
        pieces.push(parse_interval(part, start)?);
        start += part.len() + 1;
    }
    Ok(IntervalSet::normalize(pieces))
}

/// Parses one `Llo,hiR` token; `base` is its byte offset in the full input.
fn parse_interval(token: &str, base: usize) -> Result<Interval> {
    let lead = token.len() - token.trim_start().len();
    let body = token.trim();
    let pos = base + lead;
    let mut chars = body.chars();
    let lo_closed = match chars.next() {
        Some('[') => true,
        Some('(') => false,
        Some(c) => return Err(err(pos, format!("expected `(` or `[`, found `{c}`"))),
        None => return Err(err(pos, "expected an interval, found nothing")),
    };
    let hi_closed = match body.chars().last() {
        Some(']') if body.len() > 1 => true,
        Some(')') if body.len() > 1 => false,
        _ => return Err(err(pos + body.len().saturating_sub(1), "expected interval to end with `)` or `]`")),
    };
    let inner = &body[1..body.len() - 1];
    let comma = inner.find(',').ok_or_else(|| err(pos + 1, "expected `lo,hi` inside the brackets"))?;
    let (lo_text, hi_text) = (&inner[..comma], &inner[comma + 1..]);
    let lo = parse_rational(lo_text).ok_or_else(|| err(pos + 1, format!("malformed rational `{}`", lo_text.trim())))?;
    let hi = parse_rational(hi_text)
        .ok_or_else(|| err(pos + 2 + comma, format!("malformed rational `{}`", hi_text.trim())))?;
    Ok(Interval::new(lo, lo_closed, hi, hi_closed))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn emits_canonical_a0() {
        assert_eq!(crate::sumfree::a0().to_string(), "(8/177,4/59)|(28/177,14/59)|(2/3,1)");
        assert_eq!(IntervalSet::empty().to_string(), "{}");
    }

    #[test]
    fn parses_non_canonical_input() {
        let s: IntervalSet = "(2/3, 2/2) | (56/354,42/177)|(16/354,4/59)".parse().unwrap();
        assert_eq!(s, crate::sumfree::a0());
        let merged: IntervalSet = "[0,1/2]|(1/4,1)".parse().unwrap();
        assert_eq!(merged.to_string(), "[0,1)");
        let point: IntervalSet = "[1/2,2/4]".parse().unwrap();
        assert_eq!(point.to_string(), "[1/2,1/2]");
        assert!(" {} ".parse::<IntervalSet>().unwrap().is_empty());
        let neg: IntervalSet = "(-31/59,8/177)".parse().unwrap();
        assert_eq!(neg.inf().unwrap(), rat(-31, 59));
    }

    #[test]
    fn reports_positions() {
        match "(0,1)|(1/0,2)".parse::<IntervalSet>() {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 7),
            other => panic!("unexpected {other:?}"),
        }
        match "(0,1)|[2,x]".parse::<IntervalSet>() {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 9),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!("0,1)".parse::<IntervalSet>(), Err(Error::Parse { position: 0, .. })));
        assert!("(0;1)".parse::<IntervalSet>().is_err());
        assert!("(0,1".parse::<IntervalSet>().is_err());
        assert!("{(0,1)}".parse::<IntervalSet>().is_err());
        assert!("".parse::<IntervalSet>().is_err());
        assert!("(0,1)|".parse::<IntervalSet>().is_err());
    }
}
