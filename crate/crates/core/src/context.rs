//! Blocked variable contexts for the polynomial rings used throughout.
//!
//! A context fixes an ordered set of variables split into three blocks:
//! species variables (the x-block), vertex variables (the K-block) and
//! auxiliary variables (t's, the saturation variable y, the Laurent
//! witness w, internal row variables). Variable indices are global:
//! x-block first, then K-block, then auxiliaries.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

/// Which block a variable belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Block {
    X,
    K,
    Aux,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ContextError {
    DuplicateName(String),
    EmptyName,
}

impl fmt::Display for ContextError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ContextError::DuplicateName(n) => write!(f, "duplicate variable name `{}`", n),
            ContextError::EmptyName => write!(f, "empty variable name"),
        }
    }
}

impl std::error::Error for ContextError {}

/// An ordered, blocked set of polynomial variables.
///
/// Immutable after construction; cheap to share behind an `Arc`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct VariableContext {
    x_names: Vec<String>,
    k_names: Vec<String>,
    aux_names: Vec<String>,
}

impl VariableContext {
    pub fn new<S: Into<String>>(
        x_names: Vec<S>,
        k_names: Vec<S>,
        aux_names: Vec<S>,
    ) -> Result<Self, ContextError> {
        let ctx = VariableContext {
            x_names: x_names.into_iter().map(Into::into).collect(),
            k_names: k_names.into_iter().map(Into::into).collect(),
            aux_names: aux_names.into_iter().map(Into::into).collect(),
        };
        let mut seen = BTreeSet::new();
        for name in ctx.names() {
            if name.is_empty() {
                return Err(ContextError::EmptyName);
            }
            if !seen.insert(name.to_string()) {
                return Err(ContextError::DuplicateName(name.to_string()));
            }
        }
        Ok(ctx)
    }

    /// Standard ring for `s` species and `n` vertices: x1..xs, K1..Kn.
    pub fn standard(s: usize, n: usize) -> Arc<Self> {
        let x = (1..=s).map(|i| format!("x{}", i)).collect();
        let k = (1..=n).map(|i| format!("K{}", i)).collect();
        Arc::new(VariableContext::new(x, k, Vec::<String>::new()).expect("canonical names are distinct"))
    }

    pub fn num_vars(&self) -> usize {
        self.x_names.len() + self.k_names.len() + self.aux_names.len()
    }

    pub fn x_count(&self) -> usize {
        self.x_names.len()
    }

    pub fn k_count(&self) -> usize {
        self.k_names.len()
    }

    pub fn aux_count(&self) -> usize {
        self.aux_names.len()
    }

    pub fn block(&self, idx: usize) -> Block {
        let s = self.x_names.len();
        let n = self.k_names.len();
        if idx < s {
            Block::X
        } else if idx < s + n {
            Block::K
        } else {
            Block::Aux
        }
    }

    pub fn name(&self, idx: usize) -> &str {
        let s = self.x_names.len();
        let n = self.k_names.len();
        if idx < s {
            &self.x_names[idx]
        } else if idx < s + n {
            &self.k_names[idx - s]
        } else {
            &self.aux_names[idx - s - n]
        }
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names().position(|n| n == name)
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.x_names
            .iter()
            .chain(self.k_names.iter())
            .chain(self.aux_names.iter())
            .map(String::as_str)
    }

    pub fn all_indices(&self) -> Vec<usize> {
        (0..self.num_vars()).collect()
    }

    pub fn x_indices(&self) -> Vec<usize> {
        (0..self.x_count()).collect()
    }

    pub fn k_indices(&self) -> Vec<usize> {
        (self.x_count()..self.x_count() + self.k_count()).collect()
    }

    pub fn aux_indices(&self) -> Vec<usize> {
        (self.x_count() + self.k_count()..self.num_vars()).collect()
    }

    /// Index of the K-variable for vertex `v` (0-based).
    pub fn k_var(&self, v: usize) -> usize {
        debug_assert!(v < self.k_count());
        self.x_count() + v
    }

    /// A name not used by any variable of this context: `base`, then
    /// `base1`, `base2`, ...
    pub fn fresh_name(&self, base: &str) -> String {
        if self.index_of(base).is_none() {
            return base.to_string();
        }
        for i in 1.. {
            let candidate = format!("{}{}", base, i);
            if self.index_of(&candidate).is_none() {
                return candidate;
            }
        }
        unreachable!()
    }

    /// Extends the auxiliary block with new names, keeping existing
    /// indices stable. Returns the extended context and the indices of
    /// the added variables.
    pub fn with_aux(&self, names: &[String]) -> (Arc<Self>, Vec<usize>) {
        let mut aux = self.aux_names.clone();
        let start = self.num_vars();
        aux.extend(names.iter().cloned());
        let ctx = VariableContext::new(
            self.x_names.clone(),
            self.k_names.clone(),
            aux,
        )
        .expect("caller supplies fresh names");
        let idxs = (start..start + names.len()).collect();
        (Arc::new(ctx), idxs)
    }

    /// Subring context on the given variables. Block membership and the
    /// relative order of the kept variables are preserved. Returns the
    /// new context and the old-index -> new-index map.
    pub fn restrict(&self, keep: &BTreeSet<usize>) -> (Arc<Self>, Vec<Option<usize>>) {
        let mut x = Vec::new();
        let mut k = Vec::new();
        let mut aux = Vec::new();
        let mut map = vec![None; self.num_vars()];
        let mut counts = (0usize, 0usize, 0usize);
        for &idx in keep {
            match self.block(idx) {
                Block::X => {
                    x.push(self.name(idx).to_string());
                    counts.0 += 1;
                }
                Block::K => {
                    k.push(self.name(idx).to_string());
                    counts.1 += 1;
                }
                Block::Aux => {
                    aux.push(self.name(idx).to_string());
                    counts.2 += 1;
                }
            }
        }
        // keep is sorted, and blocks are contiguous index ranges, so the
        // new index of a kept variable is its rank within the kept set.
        let (mut xi, mut ki, mut ai) = (0usize, counts.0, counts.0 + counts.1);
        for &idx in keep {
            match self.block(idx) {
                Block::X => {
                    map[idx] = Some(xi);
                    xi += 1;
                }
                Block::K => {
                    map[idx] = Some(ki);
                    ki += 1;
                }
                Block::Aux => {
                    map[idx] = Some(ai);
                    ai += 1;
                }
            }
        }
        let ctx = VariableContext::new(x, k, aux).expect("subset of distinct names");
        (Arc::new(ctx), map)
    }
}

impl fmt::Display for VariableContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, n) in self.names().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", n)?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_context_layout() {
        let ctx = VariableContext::standard(3, 5);
        assert_eq!(ctx.num_vars(), 8);
        assert_eq!(ctx.name(0), "x1");
        assert_eq!(ctx.name(3), "K1");
        assert_eq!(ctx.block(2), Block::X);
        assert_eq!(ctx.block(3), Block::K);
        assert_eq!(ctx.index_of("K5"), Some(7));
        assert_eq!(ctx.index_of("y"), None);
    }

    #[test]
    fn duplicate_names_rejected() {
        let err = VariableContext::new(vec!["a", "a"], vec![], vec![]).unwrap_err();
        assert_eq!(err, ContextError::DuplicateName("a".into()));
        let err = VariableContext::new(vec!["x1"], vec!["x1"], vec![]).unwrap_err();
        assert_eq!(err, ContextError::DuplicateName("x1".into()));
    }

    #[test]
    fn aux_extension_keeps_indices_stable() {
        let ctx = VariableContext::standard(2, 3);
        let (ext, idxs) = ctx.with_aux(&["y".to_string()]);
        assert_eq!(idxs, vec![5]);
        assert_eq!(ext.name(5), "y");
        for i in 0..5 {
            assert_eq!(ctx.name(i), ext.name(i));
        }
    }

    #[test]
    fn restriction_to_k_block() {
        let ctx = VariableContext::standard(2, 3);
        let keep: BTreeSet<usize> = ctx.k_indices().into_iter().collect();
        let (sub, map) = ctx.restrict(&keep);
        assert_eq!(sub.num_vars(), 3);
        assert_eq!(sub.x_count(), 0);
        assert_eq!(sub.name(0), "K1");
        assert_eq!(map[2], Some(0));
        assert_eq!(map[0], None);
    }

    #[test]
    fn fresh_name_avoids_collisions() {
        let ctx = VariableContext::new(vec!["y"], vec!["K1"], vec![]).unwrap();
        assert_eq!(ctx.fresh_name("y"), "y1");
        assert_eq!(ctx.fresh_name("w"), "w");
    }
}
