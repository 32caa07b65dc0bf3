//! Signatures `(h; m_1,...,m_r)`, the Riemann-Hurwitz characteristic and the
//! potential-signature predicate.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::rational::ExactRational;

/// Largest genus accepted by the enumerator. Every quantity derived from a
/// genus in this range (group orders up to `84(σ-1)`, integer targets) fits
/// comfortably in 64 bits.
pub const MAX_GENUS: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SignatureError {
    #[error("invalid signature text at `{token}`: {reason}")]
    Parse { token: String, reason: &'static str },
    #[error("period {0} is smaller than 2")]
    PeriodTooSmall(u64),
    #[error("genus {0} is smaller than 2")]
    GenusTooSmall(u64),
}

/// A surface genus `σ ≥ 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Genus(u64);

impl Genus {
    pub fn new(value: u64) -> Result<Self, SignatureError> {
        if value < 2 {
            Err(SignatureError::GenusTooSmall(value))
        } else {
            Ok(Self(value))
        }
    }

    pub fn value(self) -> u64 {
        self.0
    }

    /// `σ - 1`, the quantity every lattice statement is phrased in.
    pub fn euler_excess(self) -> u64 {
        self.0 - 1
    }

    /// The Hurwitz cap `84(σ-1)` on the order of an acting group.
    pub fn hurwitz_bound(self) -> u64 {
        84 * (self.0 - 1)
    }
}

impl TryFrom<u64> for Genus {
    type Error = SignatureError;
    fn try_from(value: u64) -> Result<Self, Self::Error> {
        Self::new(value)
    }
}

impl fmt::Display for Genus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A signature in canonical form: the orbit genus `h` and the periods sorted
/// non-decreasingly. Ordered by `(h, r, periods)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Signature {
    orbit_genus: u64,
    periods: Vec<u64>,
}

impl Signature {
    pub fn new(orbit_genus: u64, mut periods: Vec<u64>) -> Result<Self, SignatureError> {
        if let Some(&bad) = periods.iter().find(|&&m| m < 2) {
            return Err(SignatureError::PeriodTooSmall(bad));
        }
        periods.sort_unstable();
        Ok(Self {
            orbit_genus,
            periods,
        })
    }

    /// Builds a signature from periods already known to be valid and sorted.
    pub(crate) fn from_sorted(orbit_genus: u64, periods: Vec<u64>) -> Self {
        debug_assert!(periods.windows(2).all(|w| w[0] <= w[1]));
        debug_assert!(periods.iter().all(|&m| m >= 2));
        Self {
            orbit_genus,
            periods,
        }
    }

    pub fn orbit_genus(&self) -> u64 {
        self.orbit_genus
    }

    pub fn periods(&self) -> &[u64] {
        &self.periods
    }

    /// Number of periods `r`.
    pub fn len(&self) -> usize {
        self.periods.len()
    }

    pub fn is_empty(&self) -> bool {
        self.periods.is_empty()
    }

    /// `h - 1 + ½ Σ (1 - 1/m_i)`.
    pub fn reduced_euler(&self) -> ExactRational {
        let half = ExactRational::new(1, 2).expect("nonzero");
        let mut sum = ExactRational::zero();
        for &m in &self.periods {
            let m = i64::try_from(m).expect("period exceeds i64");
            sum = sum + ExactRational::new(m - 1, m).expect("period is nonzero");
        }
        let h = i64::try_from(self.orbit_genus).expect("orbit genus exceeds i64");
        ExactRational::from_integer(h - 1) + half * sum
    }

    /// The order `N` forced by the Riemann-Hurwitz relation `σ-1 = N·χ`, when
    /// `χ > 0` and the quotient is an integer. Period divisibility is not
    /// checked here.
    pub fn required_group_order(&self, genus: Genus) -> Option<u64> {
        let chi = self.reduced_euler();
        if !chi.is_positive() {
            return None;
        }
        let excess = i64::try_from(genus.euler_excess()).ok()?;
        let order = ExactRational::from_integer(excess).checked_div(&chi)?;
        order.to_u64().filter(|&n| n >= 1)
    }

    /// Whether the signature satisfies both arithmetic conditions for genus
    /// `σ`: a positive integral order `N` exists and every period divides it.
    pub fn is_potential(&self, genus: Genus) -> bool {
        match self.required_group_order(genus) {
            Some(n) => self.periods.iter().all(|&m| n % m == 0),
            None => false,
        }
    }
}

impl Ord for Signature {
    fn cmp(&self, other: &Self) -> Ordering {
        self.orbit_genus
            .cmp(&other.orbit_genus)
            .then(self.periods.len().cmp(&other.periods.len()))
            .then_with(|| self.periods.cmp(&other.periods))
    }
}

impl PartialOrd for Signature {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}; ", self.orbit_genus)?;
        if self.periods.is_empty() {
            f.write_str("-")?;
        } else {
            for (i, m) in self.periods.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{m}")?;
            }
        }
        f.write_str(")")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token<'a> {
    Open,
    Close,
    Semi,
    Comma,
    Dash,
    Number(&'a str),
    Junk(&'a str),
}

impl Token<'_> {
    fn text(&self) -> String {
        match self {
            Token::Open => "(".into(),
            Token::Close => ")".into(),
            Token::Semi => ";".into(),
            Token::Comma => ",".into(),
            Token::Dash => "-".into(),
            Token::Number(s) | Token::Junk(s) => (*s).into(),
        }
    }
}

fn tokenize(text: &str) -> Vec<Token<'_>> {
    let bytes = text.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        i += 1;
        let token = match c {
            b' ' | b'\t' | b'\n' | b'\r' => continue,
            b'(' => Token::Open,
            b')' => Token::Close,
            b';' => Token::Semi,
            b',' => Token::Comma,
            b'-' => Token::Dash,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                Token::Number(&text[start..i])
            }
            _ => {
                while i < bytes.len()
                    && !b"(); ,-\t\n\r".contains(&bytes[i])
                    && !bytes[i].is_ascii_digit()
                {
                    i += 1;
                }
                // keep multi-byte characters intact
                while !text.is_char_boundary(i) {
                    i += 1;
                }
                Token::Junk(&text[start..i])
            }
        };
        tokens.push(token);
    }
    tokens
}

fn parse_err(token: impl Into<String>, reason: &'static str) -> SignatureError {
    SignatureError::Parse {
        token: token.into(),
        reason,
    }
}

fn parse_number(s: &str) -> Result<u64, SignatureError> {
    s.parse::<u64>()
        .ok()
        .filter(|&v| v <= i64::MAX as u64)
        .ok_or_else(|| parse_err(s, "integer out of range"))
}

impl FromStr for Signature {
    type Err = SignatureError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let tokens = tokenize(text);
        let mut it = tokens.iter().peekable();
        let end = || parse_err("<end>", "unexpected end of input");

        match it.next() {
            Some(Token::Open) => {}
            Some(t) => return Err(parse_err(t.text(), "expected `(`")),
            None => return Err(end()),
        }
        let orbit_genus = match it.next() {
            Some(Token::Number(s)) => parse_number(s)?,
            Some(Token::Dash) => {
                let tok = match it.peek() {
                    Some(Token::Number(s)) => format!("-{s}"),
                    _ => "-".into(),
                };
                return Err(parse_err(tok, "orbit genus must be non-negative"));
            }
            Some(t) => return Err(parse_err(t.text(), "expected orbit genus")),
            None => return Err(end()),
        };
        match it.next() {
            Some(Token::Semi) => {}
            Some(t) => return Err(parse_err(t.text(), "expected `;`")),
            None => return Err(end()),
        }

        let mut periods = Vec::new();
        match it.next() {
            Some(Token::Dash) => {
                if let Some(Token::Number(s)) = it.peek() {
                    return Err(parse_err(format!("-{s}"), "period must be at least 2"));
                }
            }
            Some(Token::Number(s)) => {
                periods.push(parse_period(s)?);
                while let Some(Token::Comma) = it.peek() {
                    it.next();
                    match it.next() {
                        Some(Token::Number(s)) => periods.push(parse_period(s)?),
                        Some(Token::Dash) => {
                            let tok = match it.peek() {
                                Some(Token::Number(s)) => format!("-{s}"),
                                _ => "-".into(),
                            };
                            return Err(parse_err(tok, "period must be at least 2"));
                        }
                        Some(t) => return Err(parse_err(t.text(), "expected period")),
                        None => return Err(end()),
                    }
                }
            }
            Some(t) => return Err(parse_err(t.text(), "expected period list or `-`")),
            None => return Err(end()),
        }
        match it.next() {
            Some(Token::Close) => {}
            Some(t) => return Err(parse_err(t.text(), "expected `)`")),
            None => return Err(end()),
        }
        if let Some(t) = it.next() {
            return Err(parse_err(t.text(), "trailing input"));
        }
        Signature::new(orbit_genus, periods)
    }
}

fn parse_period(s: &str) -> Result<u64, SignatureError> {
    let m = parse_number(s)?;
    if m < 2 {
        return Err(parse_err(s, "period must be at least 2"));
    }
    Ok(m)
}

/// Parses the text grammar `(h; m1,...,mr)` / `(h; -)`.
pub fn parse_signature(text: &str) -> Result<Signature, SignatureError> {
    text.parse()
}

/// Formats with one space after the semicolon and bare commas.
pub fn format_signature(sig: &Signature) -> String {
    sig.to_string()
}

impl Serialize for Signature {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Signature {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}
