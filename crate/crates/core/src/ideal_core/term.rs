//! ℓ-group terms over named generators, printed and parsed in prefix form:
//!
//! ```text
//! f                      generator
//! 0                      zero
//! (ADD t1 t2 ...)        sum
//! (MUL k t)              integer multiple
//! (MEET a b) (JOIN a b)  pointwise min / max
//! (CHI atom ...)         indicator of a clopen set
//! ```
//!
//! Clopen atoms are `(PT i j ...)`, `(TAIL i ... from)` and `(BALL k r)`.

use std::fmt;

use crate::error::{Error, Result};
use crate::ideal_core::IdealFunction;
use crate::spectra::{ClopenAtom, ClopenSet, Point, Space};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Term {
    Zero,
    Gen(String),
    Add(Vec<Term>),
    Mul(i64, Box<Term>),
    Meet(Box<Term>, Box<Term>),
    Join(Box<Term>, Box<Term>),
    Chi(ClopenSet),
}

impl Term {
    pub fn gen(label: &str) -> Term {
        Term::Gen(label.to_string())
    }

    pub fn chi(set: ClopenSet) -> Term {
        Term::Chi(set)
    }

    pub fn add(terms: Vec<Term>) -> Term {
        let mut flat = Vec::new();
        for t in terms {
            match t {
                Term::Zero => {}
                Term::Add(ts) => flat.extend(ts),
                t => flat.push(t),
            }
        }
        match flat.len() {
            0 => Term::Zero,
            1 => flat.pop().unwrap(),
            _ => Term::Add(flat),
        }
    }

    pub fn mul(k: i64, t: Term) -> Term {
        match (k, t) {
            (0, _) | (_, Term::Zero) => Term::Zero,
            (1, t) => t,
            (k, t) => Term::Mul(k, Box::new(t)),
        }
    }

    pub fn meet(a: Term, b: Term) -> Term {
        Term::Meet(Box::new(a), Box::new(b))
    }

    pub fn join(a: Term, b: Term) -> Term {
        Term::Join(Box::new(a), Box::new(b))
    }

    /// Number of nodes, used as a certificate size.
    pub fn size(&self) -> usize {
        match self {
            Term::Zero | Term::Gen(_) | Term::Chi(_) => 1,
            Term::Add(ts) => 1 + ts.iter().map(Term::size).sum::<usize>(),
            Term::Mul(_, t) => 1 + t.size(),
            Term::Meet(a, b) | Term::Join(a, b) => 1 + a.size() + b.size(),
        }
    }

    pub fn eval<'a>(&self, space: Space, lookup: &impl Fn(&str) -> Option<&'a IdealFunction>) -> Result<IdealFunction> {
        Ok(match self {
            Term::Zero => IdealFunction::zero(space),
            Term::Gen(g) => {
                let f = lookup(g).ok_or_else(|| Error::TermSyntax(format!("unknown generator `{g}`")))?;
                if *f.space() != space {
                    return Err(Error::BackendMismatch);
                }
                f.clone()
            }
            Term::Add(ts) => {
                let mut acc = IdealFunction::zero(space);
                for t in ts {
                    acc = acc.add(&t.eval(space, lookup)?)?;
                }
                acc
            }
            Term::Mul(k, t) => t.eval(space, lookup)?.scale(*k),
            Term::Meet(a, b) => a.eval(space, lookup)?.meet(&b.eval(space, lookup)?)?,
            Term::Join(a, b) => a.eval(space, lookup)?.join(&b.eval(space, lookup)?)?,
            Term::Chi(c) => c.to_set(space)?.indicator().clone(),
        })
    }

    pub fn parse(s: &str) -> Result<Term> {
        let toks = tokenize(s);
        let mut pos = 0;
        let t = parse_term(&toks, &mut pos)?;
        if pos != toks.len() {
            return Err(Error::TermSyntax(format!("trailing input after term at token {pos}")));
        }
        Ok(t)
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Zero => write!(f, "0"),
            Term::Gen(g) => write!(f, "{g}"),
            Term::Add(ts) => {
                write!(f, "(ADD")?;
                for t in ts {
                    write!(f, " {t}")?;
                }
                write!(f, ")")
            }
            Term::Mul(k, t) => write!(f, "(MUL {k} {t})"),
            Term::Meet(a, b) => write!(f, "(MEET {a} {b})"),
            Term::Join(a, b) => write!(f, "(JOIN {a} {b})"),
            Term::Chi(c) => {
                write!(f, "(CHI")?;
                for a in &c.atoms {
                    match a {
                        ClopenAtom::Point(Point::Path(p)) => write!(f, " (PT{})", join_nums(p))?,
                        ClopenAtom::Point(Point::Leaf(l)) => write!(f, " (LEAF {l})")?,
                        ClopenAtom::Tail { prefix, from } => write!(f, " (TAIL{} {from})", join_nums(prefix))?,
                        ClopenAtom::Ball { k, residue } => write!(f, " (BALL {k} {residue})")?,
                    }
                }
                write!(f, ")")
            }
        }
    }
}

fn join_nums(v: &[u64]) -> String {
    v.iter().map(|x| format!(" {x}")).collect()
}

fn tokenize(s: &str) -> Vec<String> {
    s.replace('(', " ( ").replace(')', " ) ").split_whitespace().map(str::to_string).collect()
}

fn expect(toks: &[String], pos: &mut usize, want: &str) -> Result<()> {
    match toks.get(*pos) {
        Some(t) if t == want => {
            *pos += 1;
            Ok(())
        }
        other => Err(Error::TermSyntax(format!("expected `{want}`, found {other:?}"))),
    }
}

fn next<'a>(toks: &'a [String], pos: &mut usize) -> Result<&'a str> {
    let t = toks.get(*pos).ok_or_else(|| Error::TermSyntax("unexpected end of input".into()))?;
    *pos += 1;
    Ok(t)
}

fn int<T: std::str::FromStr>(tok: &str) -> Result<T> {
    tok.parse().map_err(|_| Error::TermSyntax(format!("expected an integer, found `{tok}`")))
}

fn nums_until_close(toks: &[String], pos: &mut usize) -> Result<Vec<u64>> {
    let mut v = Vec::new();
    while toks.get(*pos).is_some_and(|t| t != ")") {
        v.push(int(next(toks, pos)?)?);
    }
    expect(toks, pos, ")")?;
    Ok(v)
}

fn parse_atom(toks: &[String], pos: &mut usize) -> Result<ClopenAtom> {
    expect(toks, pos, "(")?;
    let head = next(toks, pos)?;
    let nums = nums_until_close(toks, pos)?;
    match (head, nums.as_slice()) {
        ("PT", p) if !p.is_empty() => Ok(ClopenAtom::Point(Point::Path(p.to_vec()))),
        ("LEAF", [l]) => Ok(ClopenAtom::Point(Point::Leaf(*l))),
        ("TAIL", [prefix @ .., from]) => Ok(ClopenAtom::Tail { prefix: prefix.to_vec(), from: *from }),
        ("BALL", [k, r]) => Ok(ClopenAtom::Ball { k: *k as u32, residue: *r }),
        _ => Err(Error::TermSyntax(format!("bad clopen atom `{head}` {nums:?}"))),
    }
}

fn parse_term(toks: &[String], pos: &mut usize) -> Result<Term> {
    let tok = next(toks, pos)?;
    if tok == ")" {
        return Err(Error::TermSyntax("unexpected `)`".into()));
    }
    if tok != "(" {
        return Ok(if tok == "0" { Term::Zero } else { Term::Gen(tok.to_string()) });
    }
    let head = next(toks, pos)?.to_string();
    let t = match head.as_str() {
        "ADD" => {
            let mut ts = Vec::new();
            while toks.get(*pos).is_some_and(|t| t != ")") {
                ts.push(parse_term(toks, pos)?);
            }
            Term::Add(ts)
        }
        "MUL" => {
            let k = int(next(toks, pos)?)?;
            Term::Mul(k, Box::new(parse_term(toks, pos)?))
        }
        "MEET" | "JOIN" => {
            let a = parse_term(toks, pos)?;
            let b = parse_term(toks, pos)?;
            if head == "MEET" {
                Term::meet(a, b)
            } else {
                Term::join(a, b)
            }
        }
        "CHI" => {
            let mut atoms = Vec::new();
            while toks.get(*pos).is_some_and(|t| t != ")") {
                atoms.push(parse_atom(toks, pos)?);
            }
            Term::Chi(ClopenSet::new(atoms))
        }
        other => return Err(Error::TermSyntax(format!("unknown operator `{other}`"))),
    };
    expect(toks, pos, ")")?;
    Ok(t)
}
