//! Braid words on `n` strings.
//!
//! Letters are nonzero integers: `g > 0` is the Artin generator
//! `sigma_g`, `g < 0` its inverse. Words are read left to right, the
//! leftmost letter acting first.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidWord {
    strings: usize,
    letters: Vec<i64>,
}

/// Block generator `sigma_{i,n1,n2}` raised to `power`: the group of `n1`
/// strings starting at string `i` crosses over the `n2` strings that follow.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BlockBraidTerm {
    pub i: usize,
    pub n1: usize,
    pub n2: usize,
    pub power: i64,
}

impl BraidWord {
    pub fn new(strings: usize, letters: Vec<i64>) -> Result<Self> {
        if strings < 2 {
            return Err(Error::TooFewStrings(strings));
        }
        for &g in &letters {
            check_letter(g, strings)?;
        }
        Ok(Self { strings, letters })
    }

    pub fn identity(strings: usize) -> Result<Self> {
        Self::new(strings, Vec::new())
    }

    pub fn strings(&self) -> usize {
        self.strings
    }

    pub fn letters(&self) -> &[i64] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Group product `self * other`.
    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.strings != other.strings {
            return Err(Error::StringMismatch(self.strings, other.strings));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord {
            strings: self.strings,
            letters,
        })
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strings: self.strings,
            letters: self.letters.iter().rev().map(|g| -g).collect(),
        }
    }

    pub fn pow(&self, p: i64) -> BraidWord {
        let base = if p < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.len() * p.unsigned_abs() as usize);
        for _ in 0..p.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        BraidWord {
            strings: self.strings,
            letters,
        }
    }

    /// Free reduction: cancels adjacent `g, -g` pairs.
    pub fn normalize(&self) -> BraidWord {
        let mut out: Vec<i64> = Vec::with_capacity(self.letters.len());
        for &g in &self.letters {
            if out.last() == Some(&-g) {
                out.pop();
            } else {
                out.push(g);
            }
        }
        BraidWord {
            strings: self.strings,
            letters: out,
        }
    }

    /// Regards the word as a braid on `strings >= self.strings()` strings.
    pub fn embed(&self, strings: usize) -> Result<BraidWord> {
        if strings < self.strings {
            return Err(Error::StringMismatch(self.strings, strings));
        }
        Ok(BraidWord {
            strings,
            letters: self.letters.clone(),
        })
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|g| g.signum()).sum()
    }

    pub fn induced_permutation(&self) -> Permutation {
        // image[s] is the current position of the strand that started at s.
        let mut position: Vec<usize> = (0..self.strings).collect();
        let mut occupant: Vec<usize> = (0..self.strings).collect();
        for &g in &self.letters {
            let a = g.unsigned_abs() as usize - 1;
            occupant.swap(a, a + 1);
            position[occupant[a]] = a;
            position[occupant[a + 1]] = a + 1;
        }
        Permutation { images: position }
    }
}

fn check_letter(g: i64, strings: usize) -> Result<()> {
    if g == 0 || g.unsigned_abs() as usize >= strings {
        return Err(Error::GeneratorOutOfRange { index: g, strings });
    }
    Ok(())
}

impl fmt::Display for BraidWord {
    /// Canonical form: signed generator indices separated by single spaces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, g) in self.letters.iter().enumerate() {
            if idx > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

impl BlockBraidTerm {
    pub fn new(i: usize, n1: usize, n2: usize, power: i64) -> Result<Self> {
        if i == 0 || n1 == 0 || n2 == 0 {
            return Err(Error::InvalidBlock(format!(
                "b[{i},{n1},{n2}] needs positive entries"
            )));
        }
        if power == 0 {
            return Err(Error::InvalidBlock("power must be nonzero".into()));
        }
        Ok(Self { i, n1, n2, power })
    }

    /// Expands into Artin generators:
    /// `(s_{i+n1-1} .. s_{i+n1+n2-2}) (s_{i+n1-2} .. s_{i+n1+n2-3}) .. (s_i .. s_{i+n2-1})`.
    pub fn expand(&self, strings: usize) -> Result<BraidWord> {
        if strings < 2 {
            return Err(Error::TooFewStrings(strings));
        }
        if self.i + self.n1 + self.n2 - 1 > strings {
            return Err(Error::BlockOutOfRange {
                i: self.i,
                n1: self.n1,
                n2: self.n2,
                strings,
            });
        }
        let mut letters = Vec::with_capacity(self.n1 * self.n2);
        for p in 0..self.n1 {
            let start = self.i + self.n1 - 1 - p;
            letters.extend((start..start + self.n2).map(|g| g as i64));
        }
        Ok(BraidWord { strings, letters }.pow(self.power))
    }
}

impl fmt::Display for BlockBraidTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "b[{},{},{}]", self.i, self.n1, self.n2)?;
        if self.power != 1 {
            write!(f, "^{}", self.power)?;
        }
        Ok(())
    }
}

/// Permutation of punctures `1..=n`, stored 0-based: `images[p]` is where
/// the strand starting at position `p` ends.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self {
            images: (0..n).collect(),
        }
    }

    /// Builds from 1-based images.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in images {
            if x == 0 || x > n || seen[x - 1] {
                return Err(Error::InvalidArgument(format!(
                    "{images:?} is not a permutation of 1..={n}"
                )));
            }
            seen[x - 1] = true;
        }
        Ok(Self {
            images: images.iter().map(|x| x - 1).collect(),
        })
    }

    /// 1-based image of 1-based point `p`.
    pub fn apply(&self, p: usize) -> usize {
        self.images[p - 1] + 1
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self` followed by `other`, i.e. `other . self`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: self.images.iter().map(|&x| other.images[x]).collect(),
        }
    }

    /// Nontrivial cycles, 1-based, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.images.len()];
        let mut out = Vec::new();
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p + 1);
                p = self.images[p];
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

/// Parses a braid word on `strings` strings.
///
/// Grammar (whitespace separated):
/// `word := term*`, `term := INT | block`,
/// `block := "b[" INT "," INT "," INT "]" ("^" INT)?`,
/// `INT := "-"? [1-9][0-9]*`.
pub fn parse_braid(text: &str, strings: usize) -> Result<BraidWord> {
    if strings < 2 {
        return Err(Error::TooFewStrings(strings));
    }
    let mut letters = Vec::new();
    let mut cursor = Cursor { src: text, pos: 0 };
    loop {
        cursor.skip_ws();
        if cursor.at_end() {
            break;
        }
        if cursor.peek() == Some('b') {
            let term = cursor.block()?;
            if !cursor.at_end() && !cursor.peek().is_some_and(char::is_whitespace) {
                return Err(cursor.error("expected whitespace after block term"));
            }
            letters.extend_from_slice(term.expand(strings)?.letters());
        } else {
            let g = cursor.int()?;
            if !cursor.at_end() && !cursor.peek().is_some_and(char::is_whitespace) {
                return Err(cursor.error("expected whitespace after generator"));
            }
            if g.unsigned_abs() as usize >= strings {
                return Err(Error::GeneratorOutOfRange { index: g, strings });
            }
            letters.push(g);
        }
    }
    Ok(BraidWord { strings, letters })
}

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl Cursor<'_> {
    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    /// 1-based character column of the cursor.
    fn column(&self) -> usize {
        self.src[..self.pos].chars().count() + 1
    }

    fn error(&self, message: &str) -> Error {
        Error::Syntax {
            column: self.column(),
            message: match self.peek() {
                Some(c) => format!("{message}, found '{c}'"),
                None => format!("{message}, found end of input"),
            },
        }
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected '{c}'")))
        }
    }

    fn int(&mut self) -> Result<i64> {
        let start = self.pos;
        if self.peek() == Some('-') {
            self.pos += 1;
        }
        match self.peek() {
            Some('1'..='9') => self.pos += 1,
            _ => return Err(self.error("expected a nonzero integer")),
        }
        while let Some('0'..='9') = self.peek() {
            self.pos += 1;
        }
        self.src[start..self.pos].parse().map_err(|_| Error::Syntax {
            column: self.src[..start].chars().count() + 1,
            message: "integer out of range".into(),
        })
    }

    fn positive(&mut self) -> Result<usize> {
        let column = self.column();
        let v = self.int()?;
        if v <= 0 {
            return Err(Error::Syntax {
                column,
                message: "block parameters must be positive".into(),
            });
        }
        Ok(v as usize)
    }

    fn block(&mut self) -> Result<BlockBraidTerm> {
        self.expect('b')?;
        self.expect('[')?;
        let i = self.positive()?;
        self.expect(',')?;
        let n1 = self.positive()?;
        self.expect(',')?;
        let n2 = self.positive()?;
        self.expect(']')?;
        let power = if self.peek() == Some('^') {
            self.pos += 1;
            self.int()?
        } else {
            1
        };
        BlockBraidTerm::new(i, n1, n2, power)
    }
}

impl FromStr for BlockBraidTerm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut cursor = Cursor { src: s.trim(), pos: 0 };
        let term = cursor.block()?;
        if !cursor.at_end() {
            return Err(cursor.error("trailing input after block term"));
        }
        Ok(term)
    }
}
