//! Set-family literals: `{0,1,2};{0,1}` with an optional `xN` suffix that
//! repeats a slot (`{0,1,2}x5`). In `Z^r` with `r > 1`, elements are tuples
//! such as `(0,1)`.

use std::iter::Peekable;
use std::str::Chars;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Element {
    Int(i64),
    Tuple(Vec<i64>),
}

/// Parses a family literal into its slots, expanding repetitions.
pub fn parse_family(src: &str) -> Result<Vec<Vec<Element>>, String> {
    let mut p = Parser {
        chars: src.chars().peekable(),
        pos: 0,
    };
    let mut slots = Vec::new();
    loop {
        p.skip_ws();
        let set = p.set()?;
        p.skip_ws();
        let copies = if p.eat('x') { p.count()? } else { 1 };
        slots.extend(std::iter::repeat_n(set, copies));
        p.skip_ws();
        match p.next() {
            None => break,
            Some(';') => continue,
            Some(c) => return Err(p.error(&format!("expected ';' or end of input, found {c:?}"))),
        }
    }
    Ok(slots)
}

struct Parser<'a> {
    chars: Peekable<Chars<'a>>,
    pos: usize,
}

impl Parser<'_> {
    fn next(&mut self) -> Option<char> {
        let c = self.chars.next();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn peek(&mut self) -> Option<char> {
        self.chars.peek().copied()
    }

    fn eat(&mut self, want: char) -> bool {
        if self.peek() == Some(want) {
            self.next();
            true
        } else {
            false
        }
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.next();
        }
    }

    fn error(&self, msg: &str) -> String {
        format!("family literal, column {}: {msg}", self.pos)
    }

    fn expect(&mut self, want: char) -> Result<(), String> {
        self.skip_ws();
        match self.next() {
            Some(c) if c == want => Ok(()),
            Some(c) => Err(self.error(&format!("expected {want:?}, found {c:?}"))),
            None => Err(self.error(&format!("expected {want:?}, found end of input"))),
        }
    }

    fn set(&mut self) -> Result<Vec<Element>, String> {
        self.expect('{')?;
        let mut out = Vec::new();
        self.skip_ws();
        if self.eat('}') {
            return Err(self.error("empty set"));
        }
        loop {
            self.skip_ws();
            out.push(self.element()?);
            self.skip_ws();
            match self.next() {
                Some(',') => continue,
                Some('}') => return Ok(out),
                Some(c) => return Err(self.error(&format!("expected ',' or '}}', found {c:?}"))),
                None => return Err(self.error("unclosed '{'")),
            }
        }
    }

    fn element(&mut self) -> Result<Element, String> {
        if !self.eat('(') {
            return Ok(Element::Int(self.int()?));
        }
        let mut coords = Vec::new();
        loop {
            self.skip_ws();
            coords.push(self.int()?);
            self.skip_ws();
            match self.next() {
                Some(',') => continue,
                Some(')') => return Ok(Element::Tuple(coords)),
                Some(c) => return Err(self.error(&format!("expected ',' or ')', found {c:?}"))),
                None => return Err(self.error("unclosed '('")),
            }
        }
    }

    fn digits(&mut self) -> String {
        let mut s = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            s.push(c);
            self.next();
        }
        s
    }

    fn int(&mut self) -> Result<i64, String> {
        let negative = self.eat('-');
        let digits = self.digits();
        if digits.is_empty() {
            return Err(self.error("expected an integer"));
        }
        let value: i64 = digits
            .parse()
            .map_err(|_| self.error(&format!("integer {digits} out of range")))?;
        Ok(if negative { -value } else { value })
    }

    fn count(&mut self) -> Result<usize, String> {
        let digits = self.digits();
        match digits.parse::<usize>() {
            Ok(n) if n > 0 => Ok(n),
            _ => Err(self.error("expected a positive repetition count after 'x'")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<Element> {
        v.iter().map(|&x| Element::Int(x)).collect()
    }

    #[test]
    fn slots_and_repetition() {
        assert_eq!(
            parse_family("{0,1,2};{5, -7}").unwrap(),
            vec![ints(&[0, 1, 2]), ints(&[5, -7])]
        );
        assert_eq!(parse_family(" {0,1,2}x3 ").unwrap(), vec![ints(&[0, 1, 2]); 3]);
        assert_eq!(
            parse_family("{1}x2;{0}").unwrap(),
            vec![ints(&[1]), ints(&[1]), ints(&[0])]
        );
    }

    #[test]
    fn tuples() {
        assert_eq!(
            parse_family("{(0,1),(2, -3)}").unwrap(),
            vec![vec![Element::Tuple(vec![0, 1]), Element::Tuple(vec![2, -3])]]
        );
    }

    #[test]
    fn errors_point_at_the_problem() {
        for bad in ["", "{", "{}", "{0,}", "{0};", "{0}x0", "{0}x", "{0} {1}", "{a}", "{(0,1}"] {
            assert!(parse_family(bad).is_err(), "{bad:?} should not parse");
        }
        assert!(parse_family("{0,}").unwrap_err().contains("column"));
    }
}
