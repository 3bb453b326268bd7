//! Ideals: a generator list plus lazily computed reduced Groebner bases.

use std::sync::{Arc, Mutex};

use crate::context::VariableContext;
use crate::groebner::buchberger;
use crate::order::MonomialOrder;
use crate::poly::Polynomial;

/// An ideal of the polynomial ring over its context.
///
/// Reduced Groebner bases are computed on demand and cached per order;
/// the cache only ever grows and recomputation is harmless because the
/// reduced basis is unique for a fixed order.
#[derive(Debug, Clone)]
pub struct Ideal {
    ctx: Arc<VariableContext>,
    generators: Vec<Polynomial>,
    cache: Arc<Mutex<Vec<(MonomialOrder, Arc<Vec<Polynomial>>)>>>,
}

impl Ideal {
    pub fn new(ctx: Arc<VariableContext>, generators: Vec<Polynomial>) -> Self {
        let generators = generators.into_iter().filter(|g| !g.is_zero()).collect();
        Ideal {
            ctx,
            generators,
            cache: Arc::new(Mutex::new(Vec::new())),
        }
    }

    pub fn zero(ctx: Arc<VariableContext>) -> Self {
        Ideal::new(ctx, Vec::new())
    }

    /// Wraps a known reduced Groebner basis without recomputing it.
    /// The caller asserts that `gb` is reduced with respect to `order`.
    pub(crate) fn with_cached_gb(
        ctx: Arc<VariableContext>,
        gb: Vec<Polynomial>,
        order: MonomialOrder,
    ) -> Self {
        let ideal = Ideal::new(ctx, gb.clone());
        ideal
            .cache
            .lock()
            .expect("gb cache poisoned")
            .push((order, Arc::new(gb)));
        ideal
    }

    pub fn context(&self) -> &Arc<VariableContext> {
        &self.ctx
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn same_context(&self, other: &Ideal) -> bool {
        Arc::ptr_eq(&self.ctx, &other.ctx) || self.ctx == other.ctx
    }

    /// The reduced Groebner basis under `order` (empty for the zero
    /// ideal), sorted ascending by leading monomial.
    pub fn groebner_basis(&self, order: &MonomialOrder) -> Arc<Vec<Polynomial>> {
        if let Some(found) = self.lookup(order) {
            return found;
        }
        // Any cached basis generates the ideal and is usually closer to
        // reduced form than the raw generators.
        let seed: Vec<Polynomial> = {
            let cache = self.cache.lock().expect("gb cache poisoned");
            match cache.first() {
                Some((_, gb)) => gb.as_ref().clone(),
                None => self.generators.clone(),
            }
        };
        let gb = Arc::new(buchberger(&self.ctx, &seed, order));
        let mut cache = self.cache.lock().expect("gb cache poisoned");
        if let Some(found) = cache.iter().find(|(o, _)| o == order) {
            return Arc::clone(&found.1);
        }
        cache.push((order.clone(), Arc::clone(&gb)));
        gb
    }

    fn lookup(&self, order: &MonomialOrder) -> Option<Arc<Vec<Polynomial>>> {
        let cache = self.cache.lock().expect("gb cache poisoned");
        cache
            .iter()
            .find(|(o, _)| o == order)
            .map(|(_, gb)| Arc::clone(gb))
    }

    /// True iff the ideal is the zero ideal.
    pub fn is_zero_ideal(&self) -> bool {
        self.generators.is_empty() || self.groebner_basis(&MonomialOrder::Grevlex).is_empty()
    }
}
