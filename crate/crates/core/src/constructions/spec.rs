use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::gf::{build_l, MatGroup};
use crate::perm::{PermGroup, DEFAULT_DEGREE_CAP};

/// Textual description of a construction, e.g. `wrP(S(5),T(1))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConstructionSpec {
    T(u32),
    P(u32),
    L(u32),
    Symmetric(usize),
    Alternating(usize),
    Cyclic(usize),
    Dihedral(usize),
    GlPerm(usize, u32),
    Wreath(Box<ConstructionSpec>, Box<ConstructionSpec>),
    WreathProduct(Box<ConstructionSpec>, Box<ConstructionSpec>),
    Direct(Vec<ConstructionSpec>),
    SemiprimitiveExample(u32),
    QuasiprimitiveExample(u32),
}

/// Result of building a spec: `L(k)` is linear, everything else acts on
/// points.
#[derive(Clone, Debug)]
pub enum Built {
    Perm(PermGroup),
    Linear(MatGroup),
}

impl ConstructionSpec {
    pub fn build(&self) -> Result<Built> {
        use ConstructionSpec::*;
        Ok(match self {
            L(k) => Built::Linear(build_l(*k)?),
            _ => Built::Perm(self.build_perm()?),
        })
    }

    /// The permutation group; linear groups become their action on nonzero
    /// vectors.
    pub fn build_perm(&self) -> Result<PermGroup> {
        use ConstructionSpec::*;
        match self {
            T(k) => super::t_k(*k),
            P(k) => super::p_k(*k),
            L(k) => build_l(*k)?.to_perm(DEFAULT_DEGREE_CAP),
            Symmetric(n) => super::symmetric(*n),
            Alternating(n) => super::alternating(*n),
            Cyclic(n) => super::cyclic(*n),
            Dihedral(n) => super::dihedral(*n),
            GlPerm(d, q) => super::gl_on_nonzero_vectors(*d, *q),
            Wreath(a, b) => super::wreath_imprimitive(&a.build_perm()?, &b.build_perm()?),
            WreathProduct(a, b) => super::wreath_product_action(&a.build_perm()?, &b.build_perm()?),
            Direct(parts) => {
                let built = parts
                    .iter()
                    .map(ConstructionSpec::build_perm)
                    .collect::<Result<Vec<_>>>()?;
                super::direct_product(&built)
            }
            SemiprimitiveExample(k) => Ok(super::semiprimitive_example(*k)?.group),
            QuasiprimitiveExample(k) => Ok(super::quasiprimitive_example(*k)?.group),
        }
    }
}

impl fmt::Display for ConstructionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use ConstructionSpec::*;
        match self {
            T(k) => write!(f, "T({})", k),
            P(k) => write!(f, "P({})", k),
            L(k) => write!(f, "L({})", k),
            Symmetric(n) => write!(f, "S({})", n),
            Alternating(n) => write!(f, "A({})", n),
            Cyclic(n) => write!(f, "C({})", n),
            Dihedral(n) => write!(f, "D({})", n),
            GlPerm(d, q) => write!(f, "GLperm({},{})", d, q),
            Wreath(a, b) => write!(f, "wr({},{})", a, b),
            WreathProduct(a, b) => write!(f, "wrP({},{})", a, b),
            Direct(parts) => {
                write!(f, "directX(")?;
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{}", p)?;
                }
                write!(f, ")")
            }
            SemiprimitiveExample(k) => write!(f, "sp_ex({})", k),
            QuasiprimitiveExample(k) => write!(f, "qp_ex({})", k),
        }
    }
}

impl FromStr for ConstructionSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut p = Parser { s: &compact, pos: 0 };
        let spec = p.spec()?;
        if p.pos != compact.len() {
            return Err(p.error("trailing input"));
        }
        Ok(spec)
    }
}

struct Parser<'a> {
    s: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, what: &str) -> Error {
        Error::Parse(format!("{} at offset {} in {:?}", what, self.pos, self.s))
    }

    fn rest(&self) -> &str {
        &self.s[self.pos..]
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.rest().starts_with(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected {:?}", c)))
        }
    }

    fn ident(&mut self) -> &str {
        let start = self.pos;
        let len = self
            .rest()
            .find(|c: char| !(c.is_ascii_alphanumeric() || c == '_'))
            .unwrap_or(self.rest().len());
        self.pos += len;
        &self.s[start..self.pos]
    }

    fn number<T: FromStr>(&mut self) -> Result<T> {
        let len = self
            .rest()
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(self.rest().len());
        let tok = &self.s[self.pos..self.pos + len];
        let v = tok.parse().map_err(|_| self.error("expected a number"))?;
        self.pos += len;
        Ok(v)
    }

    fn one_number<T: FromStr>(&mut self) -> Result<T> {
        self.expect('(')?;
        let v = self.number()?;
        self.expect(')')?;
        Ok(v)
    }

    fn two_specs(&mut self) -> Result<(Box<ConstructionSpec>, Box<ConstructionSpec>)> {
        self.expect('(')?;
        let a = self.spec()?;
        self.expect(',')?;
        let b = self.spec()?;
        self.expect(')')?;
        Ok((Box::new(a), Box::new(b)))
    }

    fn spec(&mut self) -> Result<ConstructionSpec> {
        use ConstructionSpec::*;
        let name = self.ident().to_string();
        Ok(match name.as_str() {
            "T" => T(self.one_number()?),
            "P" => P(self.one_number()?),
            "L" => L(self.one_number()?),
            "S" => Symmetric(self.one_number()?),
            "A" => Alternating(self.one_number()?),
            "C" => Cyclic(self.one_number()?),
            "D" => Dihedral(self.one_number()?),
            "sp_ex" => SemiprimitiveExample(self.one_number()?),
            "qp_ex" => QuasiprimitiveExample(self.one_number()?),
            "GLperm" => {
                self.expect('(')?;
                let d = self.number()?;
                self.expect(',')?;
                let q = self.number()?;
                self.expect(')')?;
                GlPerm(d, q)
            }
            "wr" => {
                let (a, b) = self.two_specs()?;
                Wreath(a, b)
            }
            "wrP" => {
                let (a, b) = self.two_specs()?;
                WreathProduct(a, b)
            }
            "directX" => {
                self.expect('(')?;
                let mut parts = vec![self.spec()?];
                while self.rest().starts_with(',') {
                    self.pos += 1;
                    parts.push(self.spec()?);
                }
                self.expect(')')?;
                Direct(parts)
            }
            "" => return Err(self.error("expected a construction name")),
            other => return Err(Error::Parse(format!("unknown construction {:?}", other))),
        })
    }
}
