//! Canonical text form for segments and multisegments.
//!
//! Grammar: a segment is `[a,b]` or `[a]` (integers, optional minus sign); a
//! multisegment is `0` (empty) or `+`-separated segments. Input is
//! whitespace-insensitive; canonical output carries no whitespace, prints
//! singletons in the short form, and lists segments in `(a,b)`-lex order, so
//! `parse` then `format` canonicalizes and is the identity on canonical text.

use crate::core::{Multisegment, Segment};
use crate::error::Error;

pub fn format_segment(d: Segment) -> String {
    if d.a() == d.b() {
        format!("[{}]", d.a())
    } else {
        format!("[{},{}]", d.a(), d.b())
    }
}

pub fn format_multisegment(m: &Multisegment) -> String {
    if m.is_empty() {
        return "0".to_string();
    }
    m.iter().map(|s| format_segment(*s)).collect::<Vec<_>>().join("+")
}

pub fn parse_segment(input: &str) -> Result<Segment, Error> {
    let mut p = Parser::new(input);
    p.skip_ws();
    let d = p.segment()?;
    p.finish()?;
    Ok(d)
}

pub fn parse_multisegment(input: &str) -> Result<Multisegment, Error> {
    let mut p = Parser::new(input);
    p.skip_ws();
    if p.peek() == Some('0') {
        p.pos += 1;
        p.finish()?;
        return Ok(Multisegment::new());
    }
    let mut segs = vec![p.segment()?];
    loop {
        p.skip_ws();
        if p.peek() == Some('+') {
            p.pos += 1;
            p.skip_ws();
            segs.push(p.segment()?);
        } else {
            break;
        }
    }
    p.finish()?;
    Ok(Multisegment::from_segments(segs))
}

/// Positions in errors are character (not byte) offsets into the original
/// input, counting whitespace.
struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn new(input: &str) -> Self {
        Parser { chars: input.chars().collect(), pos: 0 }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn fail<T>(&self, msg: impl Into<String>) -> Result<T, Error> {
        Err(Error::Parse { pos: self.pos, msg: msg.into() })
    }

    fn expect(&mut self, c: char) -> Result<(), Error> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            self.fail(format!("expected '{c}'"))
        }
    }

    fn integer(&mut self) -> Result<i32, Error> {
        let start = self.pos;
        let negative = self.peek() == Some('-');
        if negative {
            self.pos += 1;
        }
        let mut value: i64 = 0;
        let mut digits = 0usize;
        while let Some(c) = self.peek() {
            let Some(d) = c.to_digit(10) else { break };
            value = value * 10 + i64::from(d);
            if value > i64::from(i32::MAX) {
                return Err(Error::Parse { pos: start, msg: "integer out of range".into() });
            }
            digits += 1;
            self.pos += 1;
        }
        if digits == 0 {
            return self.fail("expected an integer");
        }
        Ok((if negative { -value } else { value }) as i32)
    }

    fn segment(&mut self) -> Result<Segment, Error> {
        let start = self.pos;
        self.expect('[')?;
        self.skip_ws();
        let a = self.integer()?;
        self.skip_ws();
        let b = if self.peek() == Some(',') {
            self.pos += 1;
            self.skip_ws();
            let b = self.integer()?;
            self.skip_ws();
            b
        } else {
            a
        };
        self.expect(']')?;
        Segment::new(a, b).map_err(|e| Error::Parse { pos: start, msg: e.to_string() })
    }

    fn finish(&mut self) -> Result<(), Error> {
        self.skip_ws();
        if self.pos == self.chars.len() {
            Ok(())
        } else {
            self.fail("unexpected trailing input")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seg(a: i32, b: i32) -> Segment {
        Segment::new(a, b).unwrap()
    }

    #[test]
    fn parses_grammar() {
        assert_eq!(
            parse_multisegment("[1,3]+[2]+[2,5]").unwrap(),
            Multisegment::from_segments(vec![seg(1, 3), seg(2, 2), seg(2, 5)])
        );
        assert_eq!(parse_multisegment("0").unwrap(), Multisegment::new());
        assert_eq!(parse_segment("[-2,-1]").unwrap(), seg(-2, -1));
        assert_eq!(parse_segment("[4]").unwrap(), seg(4, 4));
        assert_eq!(parse_segment("[4,4]").unwrap(), seg(4, 4));
    }

    #[test]
    fn whitespace_insensitive() {
        assert_eq!(
            parse_multisegment(" [ 2 , 3 ] + [ 1 ] ").unwrap(),
            parse_multisegment("[2,3]+[1]").unwrap()
        );
        assert_eq!(parse_multisegment(" 0 ").unwrap(), Multisegment::new());
    }

    #[test]
    fn canonicalizes_on_output() {
        let m = parse_multisegment("[2,5]+[1,3]+[2,2]").unwrap();
        assert_eq!(format_multisegment(&m), "[1,3]+[2]+[2,5]");
        assert_eq!(format_multisegment(&Multisegment::new()), "0");
    }

    #[test]
    fn reports_positions() {
        match parse_multisegment("[1,3]+") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 6),
            other => panic!("expected parse error, got {other:?}"),
        }
        match parse_multisegment("[3,1]") {
            Err(Error::Parse { pos, msg }) => {
                assert_eq!(pos, 0);
                assert!(msg.contains("precedes"), "{msg}");
            }
            other => panic!("expected parse error, got {other:?}"),
        }
        match parse_multisegment("0+[1]") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 1),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(parse_multisegment("").is_err());
        assert!(parse_multisegment("[1,2]x").is_err());
        assert!(parse_segment("[99999999999]").is_err());
    }

    #[test]
    fn round_trips_canonical_text() {
        for s in ["0", "[1]", "[-3,-1]+[0]+[0]+[2,4]", "[1,3]+[2]+[2,5]"] {
            let m = parse_multisegment(s).unwrap();
            assert_eq!(format_multisegment(&m), s);
        }
    }
}
