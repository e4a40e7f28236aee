//! Quivers, paths and admissible relations.

use crate::error::{Error, Result};
use crate::field::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertices: Vec<String>, arrows: Vec<(String, String, String)>) -> Result<Quiver> {
        let mut seen = std::collections::HashSet::new();
        for v in &vertices {
            if !seen.insert(v.clone()) {
                return Err(Error::Parse(format!("duplicate vertex {v:?}")));
            }
        }
        let vertex_index = |name: &str| -> Result<usize> {
            vertices
                .iter()
                .position(|v| v == name)
                .ok_or_else(|| Error::Parse(format!("unknown vertex {name:?}")))
        };
        let mut out = Vec::new();
        for (name, s, t) in arrows {
            if !seen.insert(name.clone()) {
                return Err(Error::Parse(format!("duplicate name {name:?}")));
            }
            out.push(Arrow {
                name,
                source: vertex_index(&s)?,
                target: vertex_index(&t)?,
            });
        }
        Ok(Quiver {
            vertices,
            arrows: out,
        })
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    /// Reverses every arrow, keeping all names.
    pub fn reversed(&self) -> Quiver {
        Quiver {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow {
                    name: a.name.clone(),
                    source: a.target,
                    target: a.source,
                })
                .collect(),
        }
    }

    pub fn has_oriented_cycle(&self) -> bool {
        // DFS-based cycle detection on vertices
        let n = self.vertices.len();
        let mut adj = vec![Vec::new(); n];
        for a in &self.arrows {
            adj[a.source].push(a.target);
        }
        let mut state = vec![0u8; n]; // 0 unvisited, 1 on stack, 2 done
        fn dfs(v: usize, adj: &[Vec<usize>], state: &mut [u8]) -> bool {
            state[v] = 1;
            for &w in &adj[v] {
                match state[w] {
                    1 => return true,
                    0 => {
                        if dfs(w, adj, state) {
                            return true;
                        }
                    }
                    _ => {}
                }
            }
            state[v] = 2;
            false
        }
        (0..n).any(|v| state[v] == 0 && dfs(v, &adj, &mut state))
    }

    /// Length of the longest path in an acyclic quiver.
    pub fn longest_path_len(&self) -> usize {
        assert!(!self.has_oriented_cycle());
        let n = self.vertices.len();
        let mut best = vec![None::<usize>; n];
        fn go(v: usize, arrows: &[Arrow], best: &mut [Option<usize>]) -> usize {
            if let Some(b) = best[v] {
                return b;
            }
            let mut m = 0;
            for (i, a) in arrows.iter().enumerate() {
                let _ = i;
                if a.source == v {
                    m = m.max(1 + go(a.target, arrows, best));
                }
            }
            best[v] = Some(m);
            m
        }
        (0..n).map(|v| go(v, &self.arrows, &mut best)).max().unwrap_or(0)
    }
}

/// A composable sequence of arrows; the empty sequence is the trivial path at
/// `source`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub source: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Path {
        Path {
            source: v,
            arrows: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn target(&self, q: &Quiver) -> usize {
        match self.arrows.last() {
            None => self.source,
            Some(&a) => q.arrows[a].target,
        }
    }

    /// Concatenation "self then other"; `None` when not composable.
    pub fn compose(&self, other: &Path, q: &Quiver) -> Option<Path> {
        if self.target(q) != other.source {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&other.arrows);
        Some(Path {
            source: self.source,
            arrows,
        })
    }

    pub fn label(&self, q: &Quiver) -> String {
        if self.is_trivial() {
            format!("e_{}", q.vertices[self.source])
        } else {
            self.arrows
                .iter()
                .map(|&a| q.arrows[a].name.clone())
                .collect::<Vec<_>>()
                .join("*")
        }
    }
}

/// A linear combination of parallel paths of length >= 2.
#[derive(Clone, Debug)]
pub struct Relation {
    pub terms: Vec<(Scalar, Path)>,
}

impl Relation {
    pub fn validate(&self, q: &Quiver) -> Result<()> {
        if self.terms.is_empty() {
            return Err(Error::InadmissibleRelation("empty relation".into()));
        }
        let (_, first) = &self.terms[0];
        let (s, t) = (first.source, first.target(q));
        for (_, p) in &self.terms {
            if p.len() < 2 {
                return Err(Error::InadmissibleRelation(format!(
                    "term {:?} has length {} < 2",
                    p.label(q),
                    p.len()
                )));
            }
            if p.source != s || p.target(q) != t {
                return Err(Error::InadmissibleRelation(
                    "terms are not parallel".into(),
                ));
            }
            for w in p.arrows.windows(2) {
                if q.arrows[w[0]].target != q.arrows[w[1]].source {
                    return Err(Error::InadmissibleRelation(format!(
                        "path {:?} is not composable",
                        p.label(q)
                    )));
                }
            }
        }
        Ok(())
    }
}

/// All paths of length <= max_len, trivial paths first (by vertex), then by
/// length and lexicographic arrow order. Errors out when the count explodes.
pub fn enumerate_paths(q: &Quiver, max_len: usize) -> Result<Vec<Path>> {
    const CAP: usize = 200_000;
    let mut out: Vec<Path> = (0..q.vertices.len()).map(Path::trivial).collect();
    let mut layer: Vec<Path> = out.clone();
    for _ in 1..=max_len {
        let mut next = Vec::new();
        for p in &layer {
            let t = p.target(q);
            for (ai, a) in q.arrows.iter().enumerate() {
                if a.source == t {
                    let mut arrows = p.arrows.clone();
                    arrows.push(ai);
                    next.push(Path {
                        source: p.source,
                        arrows,
                    });
                }
            }
        }
        next.sort();
        out.extend(next.iter().cloned());
        if out.len() > CAP {
            return Err(Error::InfiniteDimensional(format!(
                "more than {CAP} paths enumerated"
            )));
        }
        if next.is_empty() {
            break;
        }
        layer = next;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> Quiver {
        Quiver::new(
            vec!["1".into(), "2".into()],
            vec![("a".into(), "1".into(), "2".into())],
        )
        .unwrap()
    }

    fn loop_quiver() -> Quiver {
        Quiver::new(
            vec!["1".into()],
            vec![("x".into(), "1".into(), "1".into())],
        )
        .unwrap()
    }

    #[test]
    fn cycle_detection() {
        assert!(!a2().has_oriented_cycle());
        assert!(loop_quiver().has_oriented_cycle());
    }

    #[test]
    fn longest_path() {
        assert_eq!(a2().longest_path_len(), 1);
    }

    #[test]
    fn path_enumeration_order() {
        let q = a2();
        let paths = enumerate_paths(&q, 3).unwrap();
        let labels: Vec<String> = paths.iter().map(|p| p.label(&q)).collect();
        assert_eq!(labels, vec!["e_1", "e_2", "a"]);
    }

    #[test]
    fn loop_paths() {
        let q = loop_quiver();
        let paths = enumerate_paths(&q, 2).unwrap();
        let labels: Vec<String> = paths.iter().map(|p| p.label(&q)).collect();
        assert_eq!(labels, vec!["e_1", "x", "x*x"]);
    }

    #[test]
    fn composition() {
        let q = a2();
        let e1 = Path::trivial(0);
        let a = Path {
            source: 0,
            arrows: vec![0],
        };
        assert_eq!(e1.compose(&a, &q), Some(a.clone()));
        assert_eq!(a.compose(&a, &q), None);
    }
}
