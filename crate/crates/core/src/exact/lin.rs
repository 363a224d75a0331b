use std::collections::BTreeMap;

use num_traits::Zero;

use super::Rational;

/// Finite linear combination with exact coefficients; zero terms are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Lin<K: Ord>(BTreeMap<K, Rational>);

impl<K: Ord> Default for Lin<K> {
    fn default() -> Self {
        Lin(BTreeMap::new())
    }
}

impl<K: Ord + Clone> Lin<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(k: K, c: Rational) -> Self {
        let mut l = Self::new();
        l.add_term(k, c);
        l
    }

    pub fn add_term(&mut self, k: K, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.0.get_mut(&k) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.0.remove(&k);
                }
            }
            None => {
                self.0.insert(k, c);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Lin<K>, c: &Rational) {
        if c.is_zero() {
            return;
        }
        for (k, v) in &other.0 {
            self.add_term(k.clone(), v * c);
        }
    }

    pub fn add(&mut self, other: &Lin<K>) {
        for (k, v) in &other.0 {
            self.add_term(k.clone(), v.clone());
        }
    }

    pub fn sub(&mut self, other: &Lin<K>) {
        for (k, v) in &other.0 {
            self.add_term(k.clone(), -v.clone());
        }
    }

    pub fn scaled(&self, c: &Rational) -> Self {
        let mut out = Self::new();
        out.add_scaled(self, c);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, k: &K) -> Rational {
        self.0.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &Rational)> {
        self.0.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.0.keys()
    }

    pub fn map_keys<J: Ord + Clone>(
        &self,
        mut f: impl FnMut(&K) -> Option<(J, Rational)>,
    ) -> Lin<J> {
        let mut out = Lin::new();
        for (k, v) in &self.0 {
            if let Some((j, s)) = f(k) {
                out.add_term(j, v * s);
            }
        }
        out
    }
}

impl<K: Ord + Clone> FromIterator<(K, Rational)> for Lin<K> {
    fn from_iter<T: IntoIterator<Item = (K, Rational)>>(iter: T) -> Self {
        let mut l = Lin::new();
        for (k, c) in iter {
            l.add_term(k, c);
        }
        l
    }
}

impl<K: Ord> IntoIterator for Lin<K> {
    type Item = (K, Rational);
    type IntoIter = std::collections::btree_map::IntoIter<K, Rational>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.into_iter()
    }
}
