//! Bracket expressions and their rewriting into left-normed products.
//!
//! Grammar (whitespace is insignificant):
//!
//! ```text
//! expr := name | '[' expr ',' expr ']'
//! name := [a-z][a-z0-9]*
//! ```

use std::collections::HashMap;
use std::fmt;

use indexmap::map::Entry;
use indexmap::IndexMap;

use num_traits::{One, Signed};

use super::Algebra;
use crate::error::{Error, Result};
use crate::linalg::{int, Scalar, Vector};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum BracketExpr {
    Leaf(String),
    Node(Box<BracketExpr>, Box<BracketExpr>),
}

impl BracketExpr {
    pub fn leaf(name: impl Into<String>) -> Self {
        BracketExpr::Leaf(name.into())
    }

    pub fn node(left: BracketExpr, right: BracketExpr) -> Self {
        BracketExpr::Node(Box::new(left), Box::new(right))
    }

    pub fn depth(&self) -> usize {
        match self {
            BracketExpr::Leaf(_) => 0,
            BracketExpr::Node(l, r) => 1 + l.depth().max(r.depth()),
        }
    }

    /// Leaf names from left to right.
    pub fn leaves(&self) -> Vec<&str> {
        match self {
            BracketExpr::Leaf(n) => vec![n.as_str()],
            BracketExpr::Node(l, r) => {
                let mut v = l.leaves();
                v.extend(r.leaves());
                v
            }
        }
    }
}

impl fmt::Display for BracketExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BracketExpr::Leaf(n) => write!(f, "{n}"),
            BracketExpr::Node(l, r) => write!(f, "[{l},{r}]"),
        }
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            position: self.pos,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        self.skip_ws();
        if self.src.get(self.pos) == Some(&c) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(format!("expected '{}'", c as char))
        }
    }

    fn expr(&mut self) -> Result<BracketExpr> {
        self.skip_ws();
        match self.src.get(self.pos) {
            Some(b'[') => {
                self.pos += 1;
                let l = self.expr()?;
                self.expect(b',')?;
                let r = self.expr()?;
                self.expect(b']')?;
                Ok(BracketExpr::node(l, r))
            }
            Some(c) if c.is_ascii_lowercase() => {
                let start = self.pos;
                while self
                    .src
                    .get(self.pos)
                    .is_some_and(|c| c.is_ascii_lowercase() || c.is_ascii_digit())
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                Ok(BracketExpr::leaf(name))
            }
            Some(_) => self.err("expected a name or '['"),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses a bracket expression. Error positions are byte offsets.
pub fn parse_expr(text: &str) -> Result<BracketExpr> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return p.err("trailing input");
    }
    Ok(e)
}

/// A linear combination of left-normed words; the word `[w1, w2, ..., wk]`
/// stands for `[w1, [w2, [..., wk]]]`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LinearCombination {
    terms: IndexMap<Vec<String>, Scalar>,
}

impl LinearCombination {
    pub fn word(w: Vec<String>) -> Self {
        LinearCombination {
            terms: IndexMap::from([(w, Scalar::one())]),
        }
    }

    /// Terms in order of first appearance; no zero coefficients, no repeated words.
    pub fn terms(&self) -> impl Iterator<Item = (&Scalar, &[String])> + '_ {
        self.terms.iter().map(|(w, c)| (c, w.as_slice()))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl fmt::Display for LinearCombination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            let sign = if c.is_negative() { '-' } else { '+' };
            write!(f, "{sign}{} [{}]", c.abs(), w.join(","))?;
        }
        Ok(())
    }
}

/// Integer combination of words over interned leaf ids, kept in order of
/// first appearance like `LinearCombination`.
type Words = IndexMap<Vec<u32>, i64>;

fn add_word(out: &mut Words, c: i64, w: Vec<u32>) {
    match out.entry(w) {
        Entry::Occupied(mut e) => {
            let sum = e.get().checked_add(c).expect("coefficient overflow");
            if sum == 0 {
                e.shift_remove();
            } else {
                *e.get_mut() = sum;
            }
        }
        Entry::Vacant(e) => {
            e.insert(c);
        }
    }
}

/// Left multiplication by the word `u = [x1, ..., xk]` is the nested
/// commutator `[L_x1, [L_x2, ..., [L_x(k-1), L_xk]]]`, so `[u, v]` is its
/// expansion into products of `L`s followed by `v`. Expansions are cached by `u`.
fn commutator<'u>(u: &[u32], cache: &'u mut HashMap<Vec<u32>, Words>) -> &'u Words {
    if !cache.contains_key(u) {
        let value = match u {
            [x] => Words::from([(vec![*x], 1)]),
            [a, t @ ..] => {
                let inner = commutator(t, cache).clone();
                let mut out = Words::new();
                for (m, d) in &inner {
                    let mut am = Vec::with_capacity(1 + m.len());
                    am.push(*a);
                    am.extend_from_slice(m);
                    add_word(&mut out, *d, am);
                }
                for (m, d) in inner {
                    let mut ma = m;
                    ma.push(*a);
                    add_word(&mut out, -d, ma);
                }
                out
            }
            [] => unreachable!("words are nonempty"),
        };
        cache.insert(u.to_vec(), value);
    }
    &cache[u]
}

fn left_norm_ids(
    e: &BracketExpr,
    names: &mut IndexMap<String, ()>,
    cache: &mut HashMap<Vec<u32>, Words>,
) -> Words {
    match e {
        BracketExpr::Leaf(n) => {
            let (id, _) = names.insert_full(n.clone(), ());
            Words::from([(vec![id as u32], 1)])
        }
        BracketExpr::Node(l, r) => {
            let lc = left_norm_ids(l, names, cache);
            let rc = left_norm_ids(r, names, cache);
            let mut out = Words::new();
            for (u, a) in &lc {
                let poly = commutator(u, cache);
                for (v, b) in &rc {
                    let ab = a.checked_mul(*b).expect("coefficient overflow");
                    for (m, d) in poly {
                        let mut w = Vec::with_capacity(m.len() + v.len());
                        w.extend_from_slice(m);
                        w.extend_from_slice(v);
                        add_word(&mut out, ab.checked_mul(*d).expect("coefficient overflow"), w);
                    }
                }
            }
            out
        }
    }
}

/// Rewrites an expression as a combination of left-normed products of its leaves.
pub fn left_norm(e: &BracketExpr) -> LinearCombination {
    let mut names = IndexMap::new();
    let words = left_norm_ids(e, &mut names, &mut HashMap::new());
    let name = |id: &u32| names.get_index(*id as usize).expect("interned").0.clone();
    LinearCombination {
        terms: words
            .into_iter()
            .map(|(w, c)| (w.iter().map(name).collect(), int(c)))
            .collect(),
    }
}

fn lookup<'b>(binding: &'b HashMap<String, Vector>, name: &str, dim: usize) -> Result<&'b Vector> {
    let v = binding
        .get(name)
        .ok_or_else(|| Error::UnboundName(name.to_string()))?;
    if v.len() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: v.len(),
        });
    }
    Ok(v)
}

/// Evaluates the tree directly in `alg`.
pub fn eval_expr(alg: &Algebra, e: &BracketExpr, binding: &HashMap<String, Vector>) -> Result<Vector> {
    match e {
        BracketExpr::Leaf(n) => lookup(binding, n, alg.dim()).cloned(),
        BracketExpr::Node(l, r) => {
            let a = eval_expr(alg, l, binding)?;
            let b = eval_expr(alg, r, binding)?;
            Ok(alg.mul(&a, &b))
        }
    }
}

/// Evaluates a combination of left-normed words in `alg`. Words sharing a
/// suffix share its value.
pub fn eval_combination(
    alg: &Algebra,
    lc: &LinearCombination,
    binding: &HashMap<String, Vector>,
) -> Result<Vector> {
    let mut memo = HashMap::new();
    let mut acc = Vector::zeros(alg.dim());
    for (w, c) in &lc.terms {
        acc.add_scaled(c, &eval_word(alg, w, binding, &mut memo)?);
    }
    Ok(acc)
}

fn eval_word<'w>(
    alg: &Algebra,
    w: &'w [String],
    binding: &HashMap<String, Vector>,
    memo: &mut HashMap<&'w [String], Vector>,
) -> Result<Vector> {
    if let Some(v) = memo.get(w) {
        return Ok(v.clone());
    }
    let head = lookup(binding, &w[0], alg.dim())?;
    let value = if w.len() == 1 {
        head.clone()
    } else {
        alg.mul(head, &eval_word(alg, &w[1..], binding, memo)?)
    };
    memo.insert(w, value.clone());
    Ok(value)
}
