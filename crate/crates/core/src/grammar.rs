//! Text syntax for varieties, classes and boundaries.
//!
//! ```text
//! variety  := "P[" base ";" twists "]"
//! base     := "P" int | "Q" int | "P1xP1"
//! twists   := int ("," int)*              (Picard rank one)
//!           | pair ("," pair)*            (P1xP1, pair := "(" int "," int ")")
//! class    := "(" int ";" int ")" | "(" pair ";" int ")"
//! boundary := component ("+" component)*
//! component:= "D" int | "H" [int] | class
//! ```
//!
//! Whitespace is ignored and `−` (U+2212) is accepted as a minus sign.
//! Printing always emits the normalized form, which parses back to an equal
//! value.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::geometry::{BaseSpace, DivisorClass, Normalization, ScrollVariety};

impl fmt::Display for BaseSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseSpace::ProjSpace(s) => write!(f, "P{s}"),
            BaseSpace::Quadric(q) => write!(f, "Q{q}"),
            BaseSpace::BiProjLine => f.write_str("P1xP1"),
        }
    }
}

impl fmt::Display for ScrollVariety {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P[{};", self.base())?;
        for (k, b) in self.twists().iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            match b.as_slice() {
                [a] => write!(f, "{a}")?,
                [a, c] => write!(f, "({a},{c})")?,
                _ => unreachable!("Picard rank is one or two"),
            }
        }
        f.write_str("]")
    }
}

/// A boundary component as written, before normalization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RawComponent {
    /// `D<i>`: raw summand index.
    SubBundle(usize),
    /// `H` or `H<j>`: pullback of base generator `j`.
    BasePullback(usize),
    /// A class literal, read in the raw coordinates.
    Member(DivisorClass),
}

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            position: self.pos,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while let Some(ch) = self.src[self.pos..].chars().next() {
            if ch.is_whitespace() {
                self.pos += ch.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, ch: char) -> bool {
        if self.peek() == Some(ch) {
            self.pos += ch.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, ch: char) -> Result<()> {
        if self.eat(ch) {
            Ok(())
        } else {
            match self.peek() {
                Some(found) => self.err(format!("expected '{ch}', found '{found}'")),
                None => self.err(format!("expected '{ch}', found end of input")),
            }
        }
    }

    fn eat_str(&mut self, s: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(s) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    fn unsigned(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        let digits = self.src[start..]
            .bytes()
            .take_while(|b| b.is_ascii_digit())
            .count();
        if digits == 0 {
            return self.err("expected a number");
        }
        self.pos += digits;
        self.src[start..self.pos].parse().map_err(|_| Error::Parse {
            position: start,
            message: "number out of range".to_string(),
        })
    }

    fn int(&mut self) -> Result<i64> {
        let negative = self.eat('-') || self.eat('\u{2212}');
        let start = self.pos;
        let v = self.unsigned()?;
        let v = i64::try_from(v).map_err(|_| Error::Parse {
            position: start,
            message: "number out of range".to_string(),
        })?;
        Ok(if negative { -v } else { v })
    }

    fn small(&mut self) -> Result<u32> {
        let start = self.pos;
        let v = self.unsigned()?;
        u32::try_from(v).map_err(|_| Error::Parse {
            position: start,
            message: "number out of range".to_string(),
        })
    }

    fn finish(&mut self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(ch) => self.err(format!("unexpected trailing '{ch}'")),
        }
    }

    fn base(&mut self) -> Result<BaseSpace> {
        let start = self.pos;
        let base = if self.eat_str("P1xP1") {
            BaseSpace::BiProjLine
        } else if self.eat('P') {
            BaseSpace::ProjSpace(self.small()?)
        } else if self.eat('Q') {
            BaseSpace::Quadric(self.small()?)
        } else {
            return self.err("expected base P<s>, Q<q> or P1xP1");
        };
        base.validate().map_err(|e| Error::Parse {
            position: start,
            message: e.to_string(),
        })?;
        Ok(base)
    }

    fn pair(&mut self) -> Result<Vec<i64>> {
        self.expect('(')?;
        let a = self.int()?;
        self.expect(',')?;
        let b = self.int()?;
        self.expect(')')?;
        Ok(alloc::vec![a, b])
    }

    fn twist(&mut self, rank: usize) -> Result<Vec<i64>> {
        if rank == 1 {
            Ok(alloc::vec![self.int()?])
        } else {
            self.pair()
        }
    }

    fn class(&mut self) -> Result<DivisorClass> {
        self.expect('(')?;
        let base = if self.peek() == Some('(') {
            self.pair()?
        } else {
            alloc::vec![self.int()?]
        };
        self.expect(';')?;
        let fiber = self.int()?;
        self.expect(')')?;
        Ok(DivisorClass { base, fiber })
    }
}

/// Parses a variety and normalizes it; the returned [`Normalization`]
/// translates classes and summand indices written against the input.
pub fn parse_variety(src: &str) -> Result<Normalization> {
    let mut cur = Cursor::new(src);
    if !cur.eat_str("P[") {
        return cur.err("expected 'P['");
    }
    let base = cur.base()?;
    cur.expect(';')?;
    let mut twists = Vec::new();
    loop {
        twists.push(cur.twist(base.pic_rank())?);
        if !cur.eat(',') {
            break;
        }
    }
    cur.expect(']')?;
    cur.finish()?;
    let at = cur.pos;
    ScrollVariety::normalize(base, twists).map_err(|e| Error::Parse {
        position: at,
        message: e.to_string(),
    })
}

pub fn parse_class(src: &str) -> Result<DivisorClass> {
    let mut cur = Cursor::new(src);
    let class = cur.class()?;
    cur.finish()?;
    Ok(class)
}

pub fn parse_boundary(src: &str) -> Result<Vec<RawComponent>> {
    let mut cur = Cursor::new(src);
    let mut parts = Vec::new();
    loop {
        let part = match cur.peek() {
            Some('D') => {
                cur.pos += 1;
                RawComponent::SubBundle(cur.small()? as usize)
            }
            Some('H') => {
                cur.pos += 1;
                let has_index = cur.peek().is_some_and(|ch| ch.is_ascii_digit());
                RawComponent::BasePullback(if has_index { cur.small()? as usize } else { 0 })
            }
            Some('(') => RawComponent::Member(cur.class()?),
            _ => return cur.err("expected D<i>, H[<j>] or a class literal"),
        };
        parts.push(part);
        if !cur.eat('+') {
            break;
        }
    }
    cur.finish()?;
    Ok(parts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn parses_the_documented_forms() {
        let x = parse_variety("P[P2;0,0,1]").unwrap().scroll;
        assert_eq!(
            x,
            ScrollVariety::rank_one(BaseSpace::ProjSpace(2), &[0, 0, 1]).unwrap()
        );
        let y = parse_variety("P[Q3;0,0,2]").unwrap().scroll;
        assert_eq!(y.base(), BaseSpace::Quadric(3));
        let z = parse_variety("P[P1xP1;(0,0),(1,2)]").unwrap().scroll;
        assert_eq!(z.twists(), &[vec![0, 0], vec![1, 2]]);
        assert_eq!(parse_class("(2;3)"), Ok(DivisorClass::rank_one(2, 3)));
        assert_eq!(
            parse_class("((1,-2);0)"),
            Ok(DivisorClass::new(vec![1, -2], 0))
        );
        assert_eq!(
            parse_class(" ( \u{2212}1 ; 0 ) "),
            Ok(DivisorClass::rank_one(-1, 0))
        );
    }

    #[test]
    fn prints_normalized() {
        let norm = parse_variety("P[Q3; 0, 0, 0, -1]").unwrap();
        assert_eq!(norm.scroll.to_string(), "P[Q3;0,1,1,1]");
        let z = parse_variety("P[P1xP1;(1,2),(0,3)]").unwrap().scroll;
        assert_eq!(z.to_string(), "P[P1xP1;(0,1),(1,0)]");
    }

    #[test]
    fn errors_carry_positions() {
        assert!(matches!(
            parse_variety("P[P2;0,x]"),
            Err(Error::Parse { position: 7, .. })
        ));
        assert!(matches!(
            parse_variety("P[Q2;0,1]"),
            Err(Error::Parse { position: 2, .. })
        ));
        assert!(matches!(parse_variety("P[P2;0]"), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_variety("P[P2;0,1]z"),
            Err(Error::Parse { position: 9, .. })
        ));
        assert!(matches!(
            parse_class("(1,2)"),
            Err(Error::Parse { position: 2, .. })
        ));
        assert!(matches!(
            parse_variety("P[P1xP1;0,1]"),
            Err(Error::Parse { position: 8, .. })
        ));
        assert!(matches!(
            parse_class("(99999999999999999999;1)"),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn boundaries() {
        assert_eq!(
            parse_boundary("D2+D3").unwrap(),
            vec![RawComponent::SubBundle(2), RawComponent::SubBundle(3)]
        );
        assert_eq!(
            parse_boundary("H + (1;1) + H1").unwrap(),
            vec![
                RawComponent::BasePullback(0),
                RawComponent::Member(DivisorClass::rank_one(1, 1)),
                RawComponent::BasePullback(1),
            ]
        );
        assert!(parse_boundary("D2+").is_err());
        assert!(parse_boundary("").is_err());
    }
}
