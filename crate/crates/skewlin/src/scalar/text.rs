//! The scalar text grammar.
//!
//! `scalar := term (("+"|"-") term)*` where a term is an optional rational
//! coefficient (`int` or `int/int`) followed by an optional unit in
//! `{i, j, k}`, with at least one of the two present. Whitespace is
//! insignificant. Examples: `"1+k"`, `"j"`, `"-1/2i"`, `"-1/2 + 3/4 i"`.

use num_bigint::BigInt;

use super::{Quaternion, Rational};
use crate::error::Error;

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor {
            bytes: text.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            position: self.pos,
            message: message.into(),
        }
    }

    /// Unsigned digit run as a big integer.
    fn digits(&mut self) -> Result<BigInt, Error> {
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected digits"));
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
        text.parse::<BigInt>().map_err(|e| Error::Parse {
            position: start,
            message: e.to_string(),
        })
    }

    /// `int` or `int/int` (both unsigned here; the sign is handled by the caller).
    fn unsigned_rational(&mut self) -> Result<Rational, Error> {
        let numer = self.digits()?;
        let mark = self.pos;
        self.skip_ws();
        if self.peek() == Some(b'/') {
            self.pos += 1;
            self.skip_ws();
            let denom_pos = self.pos;
            let denom = self.digits()?;
            return Rational::from_big(numer, denom).map_err(|_| Error::Parse {
                position: denom_pos,
                message: "zero denominator".into(),
            });
        }
        self.pos = mark;
        Ok(Rational::from_big(numer, BigInt::from(1)).expect("unit denominator"))
    }
}

fn unit_index(byte: u8) -> Option<usize> {
    match byte {
        b'i' => Some(1),
        b'j' => Some(2),
        b'k' => Some(3),
        _ => None,
    }
}

/// Parses the full grammar into a quaternion.
pub fn parse_quaternion(text: &str) -> Result<Quaternion, Error> {
    let mut cur = Cursor::new(text);
    // w, x, y, z accumulators.
    let mut parts = [
        Rational::zero(),
        Rational::zero(),
        Rational::zero(),
        Rational::zero(),
    ];
    let mut first = true;
    loop {
        cur.skip_ws();
        let sign = match cur.peek() {
            None if first => return Err(cur.error("empty scalar")),
            None => break,
            Some(b'+') => {
                cur.pos += 1;
                false
            }
            Some(b'-') => {
                cur.pos += 1;
                true
            }
            Some(_) if first => false,
            Some(_) => return Err(cur.error("expected '+', '-' or end of input")),
        };
        cur.skip_ws();
        // Term body: coefficient, unit, or both.
        let coefficient = match cur.peek() {
            Some(b) if b.is_ascii_digit() => Some(cur.unsigned_rational()?),
            _ => None,
        };
        if coefficient.is_some() {
            cur.skip_ws();
        }
        let unit = match cur.peek() {
            Some(b) => unit_index(b).inspect(|_| cur.pos += 1),
            None => None,
        };
        let (slot, magnitude) = match (unit, coefficient) {
            (Some(slot), Some(c)) => (slot, c),
            (Some(slot), None) => (slot, Rational::one()),
            (None, Some(c)) => (0, c),
            (None, None) => return Err(cur.error("expected a coefficient or a unit (i, j, k)")),
        };
        let signed = if sign { -magnitude } else { magnitude };
        parts[slot] = &parts[slot] + &signed;
        first = false;
    }
    let [w, x, y, z] = parts;
    Ok(Quaternion::new(w, x, y, z))
}

/// Parses `"p"` or `"p/q"` with optional leading sign; units are rejected.
pub fn parse_rational(text: &str) -> Result<Rational, Error> {
    let mut cur = Cursor::new(text);
    cur.skip_ws();
    let negative = match cur.peek() {
        Some(b'+') => {
            cur.pos += 1;
            false
        }
        Some(b'-') => {
            cur.pos += 1;
            true
        }
        _ => false,
    };
    cur.skip_ws();
    let magnitude = cur.unsigned_rational()?;
    cur.skip_ws();
    if cur.pos != cur.bytes.len() {
        return Err(cur.error("trailing input after rational"));
    }
    Ok(if negative { -magnitude } else { magnitude })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    #[test]
    fn grammar_examples() {
        assert_eq!(
            parse_quaternion("1+k").unwrap(),
            Quaternion::new(r(1, 1), r(0, 1), r(0, 1), r(1, 1))
        );
        assert_eq!(parse_quaternion("0").unwrap(), Quaternion::zero());
        assert_eq!(
            parse_quaternion("-1/2 + 3/4 i").unwrap(),
            Quaternion::new(r(-1, 2), r(3, 4), r(0, 1), r(0, 1))
        );
        assert_eq!(parse_quaternion("j").unwrap(), Quaternion::j());
        assert_eq!(
            parse_quaternion("-1/2i").unwrap(),
            Quaternion::new(r(0, 1), r(-1, 2), r(0, 1), r(0, 1))
        );
        assert_eq!(
            parse_quaternion("2k - k + j").unwrap(),
            Quaternion::new(r(0, 1), r(0, 1), r(1, 1), r(1, 1))
        );
    }

    #[test]
    fn errors_carry_positions() {
        match parse_quaternion("1+q") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
        match parse_quaternion("") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 0),
            other => panic!("expected parse error, got {other:?}"),
        }
        match parse_quaternion("1/0") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(parse_rational("1+k").is_err());
    }

    #[test]
    fn display_round_trip() {
        for text in [
            "0",
            "1+k",
            "-i+j",
            "-1/2+3/4i",
            "5",
            "-7/3",
            "i",
            "-k",
            "1-i+j-k",
            "2/3i-4j+k-10",
        ] {
            let q = parse_quaternion(text).unwrap();
            assert_eq!(parse_quaternion(&q.to_string()).unwrap(), q);
        }
    }
}
