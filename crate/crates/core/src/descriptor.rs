//! Text descriptors for the standard families.
//!
//! ```text
//! Trt:r=3,t=1    Tr11:r=3    theta:len=4,t=3    path:len=3    star:r=4
//! power:base=(Trt:r=2,t=1),l=2    f1:base=(path:len=3)    f1:base=(star:r=2),t=2
//! Kst:s=2,t=3    cycle:n=6    P:n=4    K:n=3
//! ```
//! A nested descriptor is wrapped in parentheses when it has more than one
//! parameter. `f1` defaults to `t=1`. The last three forms are unrooted
//! patterns for the extremal and embedding commands.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::families::{
    attach_ktt_rooted, height_two_tree, power_parts, rooted_path, rooted_power, rooted_star, tree_r11, RootedGraph,
};
use crate::graph::{Bipartition, Graph};
use crate::io::Document;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Descriptor {
    Trt { r: usize, t: usize },
    Tr11 { r: usize },
    Theta { len: usize, t: usize },
    Path { len: usize },
    Star { r: usize },
    Power { base: Box<Descriptor>, l: usize },
    F1 { base: Box<Descriptor>, t: usize },
    Kst { s: usize, t: usize },
    Cycle { n: usize },
    P { n: usize },
    K { n: usize },
}

/// A built family member: the rooted graph and, when bipartite, its parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Family {
    pub rooted: RootedGraph,
    pub partition: Option<Bipartition>,
}

impl Family {
    fn plain(graph: Graph) -> Result<Self> {
        let partition = graph.bipartition();
        Ok(Family {
            rooted: RootedGraph::new(graph, Vec::new())?,
            partition,
        })
    }

    fn rooted(rooted: RootedGraph) -> Self {
        let partition = rooted.graph().bipartition();
        Family { rooted, partition }
    }

    pub fn graph(&self) -> &Graph {
        self.rooted.graph()
    }

    /// Document with `roots` omitted when there are none.
    pub fn to_document(&self) -> Document {
        let roots = (!self.rooted.roots().is_empty()).then(|| self.rooted.roots().to_vec());
        Document::new(self.rooted.graph(), roots, self.partition.clone())
    }
}

impl Descriptor {
    pub fn build(&self) -> Result<Family> {
        Ok(match self {
            Descriptor::Trt { r, t } => Family::rooted(height_two_tree(*r, *t)?),
            Descriptor::Tr11 { r } => Family::rooted(tree_r11(*r)?),
            Descriptor::Theta { len, t } => {
                if *t == 0 {
                    return Err(Error::InvalidParameter("theta needs t >= 1".into()));
                }
                Family::rooted(rooted_power(&rooted_path(*len)?, *t)?.rooted)
            }
            Descriptor::Path { len } => Family::rooted(rooted_path(*len)?),
            Descriptor::Star { r } => Family::rooted(rooted_star(*r)?),
            Descriptor::Power { base, l } => {
                let base = base.build()?;
                let power = rooted_power(&base.rooted, *l)?;
                let partition = base.partition.as_ref().map(|p| power_parts(&power, p));
                Family {
                    rooted: power.rooted,
                    partition,
                }
            }
            Descriptor::F1 { base, t } => {
                let base = base.build()?;
                let parts = base
                    .partition
                    .ok_or_else(|| Error::NotBipartite("f1 needs a bipartite base".into()))?;
                let (rooted, partition) = attach_ktt_rooted(&base.rooted, &parts, *t)?;
                Family {
                    rooted,
                    partition: Some(partition),
                }
            }
            Descriptor::Kst { s, t } => {
                let graph = Graph::complete_bipartite(*s, *t);
                let partition = Bipartition::new(s + t, (0..*s).collect(), (*s..s + t).collect())?;
                Family {
                    rooted: RootedGraph::new(graph, Vec::new())?,
                    partition: Some(partition),
                }
            }
            Descriptor::Cycle { n } => Family::plain(Graph::cycle(*n)?)?,
            Descriptor::P { n } => Family::plain(Graph::path(*n))?,
            Descriptor::K { n } => Family::plain(Graph::complete(*n))?,
        })
    }
}

/// Splits at commas outside parentheses.
fn split_top(s: &str) -> Result<Vec<&str>> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return Err(Error::Descriptor(format!("unbalanced ')' in {s:?}")));
                }
            }
            ',' if depth == 0 => {
                out.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(Error::Descriptor(format!("unbalanced '(' in {s:?}")));
    }
    out.push(&s[start..]);
    Ok(out)
}

struct Params<'a> {
    name: &'a str,
    pairs: Vec<(&'a str, &'a str)>,
}

impl<'a> Params<'a> {
    fn parse(name: &'a str, body: &'a str) -> Result<Self> {
        let mut pairs: Vec<(&str, &str)> = Vec::new();
        for item in split_top(body)? {
            let (k, v) = item
                .split_once('=')
                .ok_or_else(|| Error::Descriptor(format!("expected key=value in {name}, got {item:?}")))?;
            let k = k.trim();
            if pairs.iter().any(|(seen, _)| *seen == k) {
                return Err(Error::Descriptor(format!("key {k:?} repeated in {name}")));
            }
            pairs.push((k, v.trim()));
        }
        Ok(Params { name, pairs })
    }

    /// Rejects keys outside `allowed`.
    fn only(&self, allowed: &[&str]) -> Result<()> {
        match self.pairs.iter().find(|(k, _)| !allowed.contains(k)) {
            Some((k, _)) => Err(Error::Descriptor(format!(
                "unknown key {k:?} for {}; expected {}",
                self.name,
                allowed.join(", ")
            ))),
            None => Ok(()),
        }
    }

    fn raw(&self, key: &str) -> Option<&'a str> {
        self.pairs.iter().find(|(k, _)| *k == key).map(|(_, v)| *v)
    }

    fn int(&self, key: &str) -> Result<usize> {
        let v = self
            .raw(key)
            .ok_or_else(|| Error::Descriptor(format!("{} needs {key}=", self.name)))?;
        v.parse()
            .map_err(|_| Error::Descriptor(format!("{key}={v:?} in {} is not a non-negative integer", self.name)))
    }

    fn int_or(&self, key: &str, default: usize) -> Result<usize> {
        if self.raw(key).is_some() {
            self.int(key)
        } else {
            Ok(default)
        }
    }

    fn nested(&self, key: &str) -> Result<Box<Descriptor>> {
        let v = self
            .raw(key)
            .ok_or_else(|| Error::Descriptor(format!("{} needs {key}=", self.name)))?;
        let inner = v.strip_prefix('(').and_then(|v| v.strip_suffix(')')).unwrap_or(v);
        Ok(Box::new(inner.parse()?))
    }
}

impl FromStr for Descriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (name, body) = s.split_once(':').unwrap_or((s, ""));
        let p = Params::parse(name, body)?;
        let desc = match name {
            "Trt" | "trt" => {
                p.only(&["r", "t"])?;
                Descriptor::Trt {
                    r: p.int("r")?,
                    t: p.int("t")?,
                }
            }
            "Tr11" | "tr11" => {
                p.only(&["r"])?;
                Descriptor::Tr11 { r: p.int("r")? }
            }
            "theta" => {
                p.only(&["len", "t"])?;
                Descriptor::Theta {
                    len: p.int("len")?,
                    t: p.int("t")?,
                }
            }
            "path" => {
                p.only(&["len"])?;
                Descriptor::Path { len: p.int("len")? }
            }
            "star" => {
                p.only(&["r"])?;
                Descriptor::Star { r: p.int("r")? }
            }
            "power" => {
                p.only(&["base", "l"])?;
                Descriptor::Power {
                    base: p.nested("base")?,
                    l: p.int("l")?,
                }
            }
            "f1" => {
                p.only(&["base", "t"])?;
                Descriptor::F1 {
                    base: p.nested("base")?,
                    t: p.int_or("t", 1)?,
                }
            }
            "Kst" | "kst" => {
                p.only(&["s", "t"])?;
                Descriptor::Kst {
                    s: p.int("s")?,
                    t: p.int("t")?,
                }
            }
            "cycle" | "C" => {
                p.only(&["n"])?;
                Descriptor::Cycle { n: p.int("n")? }
            }
            "P" => {
                p.only(&["n"])?;
                Descriptor::P { n: p.int("n")? }
            }
            "K" => {
                p.only(&["n"])?;
                Descriptor::K { n: p.int("n")? }
            }
            other => return Err(Error::Descriptor(format!("unknown family {other:?}"))),
        };
        Ok(desc)
    }
}

impl fmt::Display for Descriptor {
    /// Canonical form; parses back to the same value.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Descriptor::Trt { r, t } => write!(f, "Trt:r={r},t={t}"),
            Descriptor::Tr11 { r } => write!(f, "Tr11:r={r}"),
            Descriptor::Theta { len, t } => write!(f, "theta:len={len},t={t}"),
            Descriptor::Path { len } => write!(f, "path:len={len}"),
            Descriptor::Star { r } => write!(f, "star:r={r}"),
            Descriptor::Power { base, l } => write!(f, "power:base=({base}),l={l}"),
            Descriptor::F1 { base, t } => write!(f, "f1:base=({base}),t={t}"),
            Descriptor::Kst { s, t } => write!(f, "Kst:s={s},t={t}"),
            Descriptor::Cycle { n } => write!(f, "cycle:n={n}"),
            Descriptor::P { n } => write!(f, "P:n={n}"),
            Descriptor::K { n } => write!(f, "K:n={n}"),
        }
    }
}
