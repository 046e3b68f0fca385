use alloc::format;
use alloc::vec::Vec;
use core::ops::ControlFlow;

use super::enumerate::{dioid_from_tables, is_canonical, mul_completions, semilattice_orders, EnumStats, MAX_SIZE};
use super::maps::for_each_map;
use crate::algebra::{Elem, FiniteAlgebra};
use crate::error::{Error, Result};
use crate::lattice::subidentities;
use crate::laws::{CheckOptions, Checker, LawId, LawStatus, Witness};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchQuery {
    pub satisfy: Vec<LawId>,
    pub violate: Vec<LawId>,
    pub max_size: usize,
    pub iso_reject: bool,
    pub limit: Option<usize>,
}

impl SearchQuery {
    pub fn new(satisfy: &[LawId], violate: &[LawId], max_size: usize) -> Self {
        SearchQuery { satisfy: satisfy.to_vec(), violate: violate.to_vec(), max_size, iso_reject: false, limit: None }
    }

    pub fn validate(&self) -> Result<()> {
        if let Some(&l) = self.satisfy.iter().find(|l| self.violate.contains(l)) {
            return Err(Error::ContradictoryQuery(l.name()));
        }
        if !(1..=MAX_SIZE).contains(&self.max_size) {
            return Err(Error::SizeOutOfRange(self.max_size));
        }
        Ok(())
    }

    fn needs_dom(&self) -> bool {
        self.satisfy.iter().chain(&self.violate).any(|l| l.needs_dom())
    }

    fn needs_adom(&self) -> bool {
        self.satisfy.iter().chain(&self.violate).any(|l| l.needs_adom())
    }

    /// Candidate images for each element under the satisfy-set's consequences.
    fn dom_ranges(&self, s: &FiniteAlgebra) -> Vec<Vec<Elem>> {
        use LawId::*;
        let bounded = self.satisfy.iter().any(|l| matches!(l, D3 | DomRange | Predomain2 | Lla | DAdj));
        let strict = self.satisfy.contains(&D4);
        let s1 = subidentities(s);
        s.elements()
            .map(|x| {
                if strict && x == s.zero() {
                    alloc::vec![s.zero()]
                } else if bounded {
                    s1.to_vec()
                } else {
                    s.elements().collect()
                }
            })
            .collect()
    }

    fn adom_ranges(&self, s: &FiniteAlgebra) -> Vec<Vec<Elem>> {
        let s1 = subidentities(s);
        let bounded = self.satisfy.contains(&LawId::A2);
        s.elements().map(|_| if bounded { s1.to_vec() } else { s.elements().collect() }).collect()
    }
}

/// A model satisfying the query, with the first violated law and its witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchHit {
    pub algebra: FiniteAlgebra,
    pub violated: LawId,
    pub witness: Witness,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub enumeration: EnumStats,
    /// (dioid, map) candidates generated.
    pub candidates: u64,
    /// Candidates rejected by the satisfy-set.
    pub rejected: u64,
    /// Candidates that passed the satisfy-set and were tested against the violate-set.
    pub checked: u64,
}

impl SearchStats {
    pub fn merge(&mut self, o: &SearchStats) {
        let (e, f) = (&mut self.enumeration, &o.enumeration);
        e.orders += f.orders;
        e.nodes += f.nodes;
        e.pruned += f.pruned;
        e.dioids += f.dioids;
        e.iso_rejected += f.iso_rejected;
        self.candidates += o.candidates;
        self.rejected += o.rejected;
        self.checked += o.checked;
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult {
    pub hits: Vec<SearchHit>,
    /// The whole search space up to `max_size` was covered.
    pub complete: bool,
    pub stats: SearchStats,
}

impl SearchResult {
    /// Exhaustion certificate: everything covered and nothing found.
    pub fn exhausted(&self) -> bool {
        self.complete && self.hits.is_empty()
    }
}

/// Result of searching the dioids over one addition table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionResult {
    pub hits: Vec<SearchHit>,
    pub stats: SearchStats,
    /// Stopped early because `limit` hits were found.
    pub truncated: bool,
}

/// Searches the dioids of size `n` over the addition table `add` (the
/// `order`-th of [`semilattice_orders`]), stopping after `limit` hits.
pub fn search_partition(q: &SearchQuery, n: usize, order: usize, add: &[Elem], limit: Option<usize>) -> PartitionResult {
    let opts = CheckOptions::default();
    let mut stats = SearchStats::default();
    let mut hits = Vec::new();
    let (needs_dom, needs_adom) = (q.needs_dom(), q.needs_adom());
    let mut k = 0u64;
    let mut enum_stats = EnumStats { orders: 1, ..EnumStats::default() };
    let flow = mul_completions(n, add, &mut enum_stats, &mut |mul| {
        if q.iso_reject && !is_canonical(n, add, &mul) {
            stats.enumeration.iso_rejected += 1;
            return ControlFlow::Continue(());
        }
        let base = dioid_from_tables(n, format!("d{n}-o{order}"), add.to_vec(), mul);
        let dom_maps = if needs_dom { maps(&q.dom_ranges(&base)) } else { alloc::vec![Vec::new()] };
        let adom_maps = if needs_adom { maps(&q.adom_ranges(&base)) } else { alloc::vec![Vec::new()] };
        for dom in &dom_maps {
            for adom in &adom_maps {
                stats.candidates += 1;
                k += 1;
                let mut s = base.clone().renamed(format!("d{n}-o{order}-c{k}"));
                if needs_dom {
                    s = s.with_dom(dom.clone()).unwrap();
                }
                if needs_adom {
                    s = s.with_adom(adom.clone()).unwrap();
                }
                let checker = Checker::new(&s, &opts);
                if !q.satisfy.iter().all(|&l| checker.evaluate(l).passed()) {
                    stats.rejected += 1;
                    continue;
                }
                stats.checked += 1;
                let violation = q.violate.iter().find_map(|&l| match checker.evaluate(l) {
                    LawStatus::Fail(w) | LawStatus::Bug(w) => Some((l, w)),
                    _ => None,
                });
                if let Some((violated, witness)) = violation {
                    drop(checker);
                    hits.push(SearchHit { algebra: s, violated, witness });
                    if limit.is_some_and(|l| hits.len() >= l) {
                        return ControlFlow::Break(());
                    }
                }
            }
        }
        ControlFlow::Continue(())
    });
    stats.enumeration.orders += enum_stats.orders;
    stats.enumeration.nodes += enum_stats.nodes;
    stats.enumeration.pruned += enum_stats.pruned;
    stats.enumeration.dioids += enum_stats.dioids;
    PartitionResult { hits, stats, truncated: flow.is_break() }
}

fn maps(ranges: &[Vec<Elem>]) -> Vec<Vec<Elem>> {
    let mut out = Vec::new();
    for_each_map(ranges, |m| out.push(m));
    out
}

/// Enumerates dioids of size `1..=max_size` with every relevant domain and
/// antidomain map, keeping those that satisfy all `satisfy` laws and fail
/// at least one `violate` law.
pub fn search(q: &SearchQuery) -> Result<SearchResult> {
    q.validate()?;
    let mut hits = Vec::new();
    let mut stats = SearchStats::default();
    for n in 1..=q.max_size {
        for (oi, add) in semilattice_orders(n)?.iter().enumerate() {
            let remaining = q.limit.map(|l| l - hits.len());
            let part = search_partition(q, n, oi, add, remaining);
            stats.merge(&part.stats);
            hits.extend(part.hits);
            if part.truncated {
                return Ok(SearchResult { hits, complete: false, stats });
            }
        }
    }
    Ok(SearchResult { hits, complete: true, stats })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laws::{parse_laws, DOMAIN_SEMIRING};

    #[test]
    fn contradictory_query() {
        let q = SearchQuery::new(&[LawId::Locality], &[LawId::Locality], 2);
        assert_eq!(search(&q), Err(Error::ContradictoryQuery("locality")));
        let q = SearchQuery::new(&[], &[LawId::Locality], 7);
        assert_eq!(search(&q), Err(Error::SizeOutOfRange(7)));
    }

    #[test]
    fn finds_non_boolean_domain_algebra() {
        let q = SearchQuery::new(DOMAIN_SEMIRING, &[LawId::DomBoolean], 3);
        let r = search(&q).unwrap();
        assert!(!r.hits.is_empty());
        let h = &r.hits[0];
        assert_eq!(h.algebra.size(), 3);
        // the hit is the chain with dom = id
        assert_eq!(h.algebra.dom().unwrap(), &[0, 1, 2]);
    }

    #[test]
    fn limit_truncates() {
        let q = SearchQuery { limit: Some(1), ..SearchQuery::new(&parse_laws("full,lla").unwrap(), &[LawId::Locality], 4) };
        let r = search(&q).unwrap();
        assert_eq!(r.hits.len(), 1);
        assert!(!r.complete);
    }
}
