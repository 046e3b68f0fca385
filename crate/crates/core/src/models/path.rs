use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use super::powerset::{expand, AtomSystem};
use crate::algebra::{Elem, FiniteAlgebra};
use crate::error::{Error, Result};

/// Path models are expanded only up to this many paths (carrier `2^12`).
pub const MAX_PATHS: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// A directed graph `σ, τ : E → V`, required to be acyclic.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Dag {
    pub name: String,
    pub vertices: Vec<String>,
    pub edges: Vec<Edge>,
}

impl Dag {
    pub fn new(name: impl Into<String>, vertices: &[&str], edges: &[(&str, &str, &str)]) -> Result<Dag> {
        let vertices: Vec<String> = vertices.iter().map(|v| v.to_string()).collect();
        let lookup = |v: &str| {
            vertices
                .iter()
                .position(|x| x == v)
                .ok_or_else(|| Error::InvalidGraph(alloc::format!("undeclared vertex `{v}`")))
        };
        let edges = edges
            .iter()
            .map(|&(e, s, t)| Ok(Edge { name: e.to_string(), source: lookup(s)?, target: lookup(t)? }))
            .collect::<Result<Vec<_>>>()?;
        let dag = Dag { name: name.into(), vertices, edges };
        dag.check()?;
        Ok(dag)
    }

    /// Rejects dangling endpoints, duplicate names and cycles.
    pub fn check(&self) -> Result<()> {
        let nv = self.vertices.len();
        for (i, v) in self.vertices.iter().enumerate() {
            if self.vertices[..i].contains(v) {
                return Err(Error::InvalidGraph(alloc::format!("duplicate vertex `{v}`")));
            }
        }
        for (i, e) in self.edges.iter().enumerate() {
            if e.source >= nv || e.target >= nv {
                return Err(Error::InvalidGraph(alloc::format!("edge `{}` has an undeclared endpoint", e.name)));
            }
            if self.edges[..i].iter().any(|f| f.name == e.name) {
                return Err(Error::InvalidGraph(alloc::format!("duplicate edge `{}`", e.name)));
            }
        }
        // Kahn's algorithm
        let mut indegree = vec![0usize; nv];
        for e in &self.edges {
            indegree[e.target] += 1;
        }
        let mut ready: Vec<usize> = (0..nv).filter(|&v| indegree[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = ready.pop() {
            seen += 1;
            for e in self.edges.iter().filter(|e| e.source == v) {
                indegree[e.target] -= 1;
                if indegree[e.target] == 0 {
                    ready.push(e.target);
                }
            }
        }
        if seen < nv {
            let v = (0..nv).find(|&v| indegree[v] > 0).unwrap_or(0);
            return Err(Error::CyclicGraph(self.vertices[v].clone()));
        }
        Ok(())
    }
}

/// The enumerated paths of a DAG. A path is stored as its alternating
/// vertex/edge index sequence `v₁ e₁ v₂ … vₙ`; paths are ordered by length,
/// then lexicographically by that sequence.
#[derive(Clone, Debug)]
pub struct PathModel {
    graph: Dag,
    paths: Vec<Vec<usize>>,
}

impl PathModel {
    pub fn new(graph: Dag) -> Result<PathModel> {
        graph.check()?;
        let mut paths: Vec<Vec<usize>> = (0..graph.vertices.len()).map(|v| vec![v]).collect();
        let mut frontier = paths.clone();
        while !frontier.is_empty() {
            if paths.len() > MAX_PATHS {
                return Err(Error::TooManyPaths { max: MAX_PATHS });
            }
            let mut next = Vec::new();
            for p in &frontier {
                let end = *p.last().unwrap();
                for (ei, e) in graph.edges.iter().enumerate() {
                    if e.source == end {
                        let mut q = p.clone();
                        q.push(ei);
                        q.push(e.target);
                        next.push(q);
                    }
                }
            }
            next.sort();
            paths.extend(next.iter().cloned());
            frontier = next;
        }
        if paths.len() > MAX_PATHS {
            return Err(Error::TooManyPaths { max: MAX_PATHS });
        }
        Ok(PathModel { graph, paths })
    }

    pub fn graph(&self) -> &Dag {
        &self.graph
    }

    pub fn paths(&self) -> &[Vec<usize>] {
        &self.paths
    }

    /// Display name, e.g. `u.e1.v`.
    pub fn path_name(&self, i: usize) -> String {
        let p = &self.paths[i];
        let parts: Vec<&str> = p
            .iter()
            .enumerate()
            .map(|(pos, &x)| if pos % 2 == 0 { self.graph.vertices[x].as_str() } else { self.graph.edges[x].name.as_str() })
            .collect();
        parts.join(".")
    }

    /// Carrier element for a set of paths given by display name.
    pub fn set(&self, names: &[&str]) -> Option<Elem> {
        let mut mask = 0;
        for name in names {
            let i = (0..self.paths.len()).find(|&i| self.path_name(i) == *name)?;
            mask |= 1 << i;
        }
        Some(mask)
    }

    pub fn expand(&self) -> FiniteAlgebra {
        let k = self.paths.len();
        let index: BTreeMap<&[usize], usize> = self.paths.iter().enumerate().map(|(i, p)| (p.as_slice(), i)).collect();
        let mut compose = Vec::with_capacity(k * k);
        for p in &self.paths {
            for q in &self.paths {
                let glued = (p.last() == q.first()).then(|| {
                    let mut r = p.clone();
                    r.extend_from_slice(&q[1..]);
                    index[r.as_slice()]
                });
                compose.push(glued);
            }
        }
        let source_unit = self.paths.iter().map(|p| p[0]).collect();
        let units = (0..self.graph.vertices.len()).fold(0u32, |acc, v| acc | 1 << v);
        let names = (0..k).map(|i| self.path_name(i)).collect();
        expand(&self.graph.name, &AtomSystem { names, compose, source_unit, units })
    }
}

/// Powerset algebra of all paths of `g`.
pub fn path_algebra(g: &Dag) -> Result<FiniteAlgebra> {
    Ok(PathModel::new(g.clone())?.expand())
}
