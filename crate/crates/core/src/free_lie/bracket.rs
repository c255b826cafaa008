//! Bracket monomials: binary trees of Lie brackets over single letters.

use std::fmt;

use crate::algebra::{letter_name, NCSeries, ParseError, Truncation};

use super::lyndon::standard_factorization;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BracketTree {
    Leaf(u8),
    Node(Box<BracketTree>, Box<BracketTree>),
}

impl BracketTree {
    pub fn bracket(a: BracketTree, b: BracketTree) -> BracketTree {
        BracketTree::Node(Box::new(a), Box::new(b))
    }

    /// `ad_l^k (m)`, right-nested.
    pub fn ad_power(l: u8, k: usize, m: BracketTree) -> BracketTree {
        (0..k).fold(m, |acc, _| BracketTree::bracket(BracketTree::Leaf(l), acc))
    }

    /// Number of leaves.
    pub fn degree(&self) -> usize {
        match self {
            BracketTree::Leaf(_) => 1,
            BracketTree::Node(a, b) => a.degree() + b.degree(),
        }
    }

    /// Number of brackets.
    pub fn brackets(&self) -> usize {
        self.degree() - 1
    }

    pub fn leaves(&self) -> Vec<u8> {
        match self {
            BracketTree::Leaf(l) => vec![*l],
            BracketTree::Node(a, b) => {
                let mut v = a.leaves();
                v.extend(b.leaves());
                v
            }
        }
    }

    /// Standard bracketing of a Lyndon word.
    pub fn standard(w: &[u8]) -> BracketTree {
        match standard_factorization(w) {
            None => BracketTree::Leaf(w[0]),
            Some((u, v)) => BracketTree::bracket(Self::standard(u), Self::standard(v)),
        }
    }

    /// Left-normed bracketing `[[..[w1, w2], w3].., wn]`.
    pub fn left_normed(w: &[u8]) -> BracketTree {
        let mut t = BracketTree::Leaf(w[0]);
        for &l in &w[1..] {
            t = BracketTree::bracket(t, BracketTree::Leaf(l));
        }
        t
    }

    /// Evaluates the tree with leaf `l` replaced by `images[l]`, brackets as commutators.
    pub fn substitute(&self, images: &[NCSeries]) -> NCSeries {
        match self {
            BracketTree::Leaf(l) => images[*l as usize].clone(),
            BracketTree::Node(a, b) => a.substitute(images).commutator(&b.substitute(images)),
        }
    }

    /// Expansion in the free associative algebra on `letters` letters.
    pub fn expand(&self, letters: usize, trunc: &Truncation) -> NCSeries {
        let gens: Vec<NCSeries> = (0..letters as u8)
            .map(|l| NCSeries::generator(letters, trunc.clone(), l))
            .collect();
        self.substitute(&gens)
    }

    /// Parses `X`, `Y`, `[X,[X,Y]]`, ... (letters `X Y Z U V W`).
    pub fn parse(s: &str) -> Result<BracketTree, ParseError> {
        let b = s.as_bytes();
        let mut pos = 0;
        let t = parse_tree(b, &mut pos)?;
        skip_ws(b, &mut pos);
        if pos != b.len() {
            return Err(ParseError::new(pos, "unexpected trailing input"));
        }
        Ok(t)
    }
}

fn skip_ws(b: &[u8], pos: &mut usize) {
    while *pos < b.len() && b[*pos].is_ascii_whitespace() {
        *pos += 1;
    }
}

fn parse_tree(b: &[u8], pos: &mut usize) -> Result<BracketTree, ParseError> {
    skip_ws(b, pos);
    match b.get(*pos) {
        Some(b'[') => {
            *pos += 1;
            let l = parse_tree(b, pos)?;
            skip_ws(b, pos);
            if b.get(*pos) != Some(&b',') {
                return Err(ParseError::new(*pos, "expected `,`"));
            }
            *pos += 1;
            let r = parse_tree(b, pos)?;
            skip_ws(b, pos);
            if b.get(*pos) != Some(&b']') {
                return Err(ParseError::new(*pos, "expected `]`"));
            }
            *pos += 1;
            Ok(BracketTree::bracket(l, r))
        }
        Some(&c) => match b"XYZUVW".iter().position(|&n| n == c) {
            Some(i) => {
                *pos += 1;
                Ok(BracketTree::Leaf(i as u8))
            }
            None => Err(ParseError::new(*pos, "expected a letter or `[`")),
        },
        None => Err(ParseError::new(*pos, "unexpected end of input")),
    }
}

impl fmt::Display for BracketTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BracketTree::Leaf(l) => write!(f, "{}", letter_name(*l)),
            BracketTree::Node(a, b) => write!(f, "[{a},{b}]"),
        }
    }
}
