//! Shipped example algebras, stored in the text document format.

use super::{load_frobenius, FrobeniusAlgebra};

pub const BUILTINS: &[(&str, &str)] = &[
    ("point", POINT),
    ("S2", S2),
    ("S3", S3),
    ("S4", S4),
    ("S2xS2", S2XS2),
    ("CP2", CP2),
    ("S7ext", S7EXT),
];

pub fn builtin_names() -> Vec<&'static str> {
    BUILTINS.iter().map(|(n, _)| *n).collect()
}

pub fn builtin(name: &str) -> Option<FrobeniusAlgebra> {
    BUILTINS
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, doc)| load_frobenius(doc).expect("built-in documents are well formed"))
}

const POINT: &str = "\
name point
frobenius_degree 2
simply_connected true
basis
  e0 0
unit e0
counit
  e0 1
coproduct
  e0 -> 1 (e0 ⊗ e0)
";

const S2: &str = "\
name S2
frobenius_degree 2
simply_connected true
basis
  e0 0
  e2 2
unit e0
counit
  e0 1
product
  e2 e2 -> 1 e2
  e2 e0 -> 1 e0
  e0 e2 -> 1 e0
coproduct
  e0 -> 1 (e0 ⊗ e0)
  e2 -> 1 (e2 ⊗ e0)
  e2 -> 1 (e0 ⊗ e2)
";

const S3: &str = "\
name S3
frobenius_degree 3
simply_connected true
basis
  e0 0
  e3 3
unit e0
counit
  e0 1
product
  e3 e3 -> 1 e3
  e3 e0 -> 1 e0
  e0 e3 -> -1 e0
coproduct
  e0 -> 1 (e0 ⊗ e0)
  e3 -> 1 (e3 ⊗ e0)
  e3 -> 1 (e0 ⊗ e3)
";

const S4: &str = "\
name S4
frobenius_degree 4
simply_connected true
basis
  e0 0
  e4 4
unit e0
counit
  e0 1
product
  e4 e4 -> 1 e4
  e4 e0 -> 1 e0
  e0 e4 -> 1 e0
coproduct
  e0 -> 1 (e0 ⊗ e0)
  e4 -> 1 (e4 ⊗ e0)
  e4 -> 1 (e0 ⊗ e4)
";

const S2XS2: &str = "\
name S2xS2
frobenius_degree 4
simply_connected true
basis
  e0 0
  a 2
  b 2
  t 4
unit e0
counit
  e0 1
product
  t t -> 1 t
  t a -> 1 a
  a t -> 1 a
  t b -> 1 b
  b t -> 1 b
  t e0 -> 1 e0
  e0 t -> 1 e0
  a b -> 1 e0
  b a -> 1 e0
coproduct
  e0 -> 1 (e0 ⊗ e0)
  a -> 1 (a ⊗ e0)
  a -> 1 (e0 ⊗ a)
  b -> 1 (b ⊗ e0)
  b -> 1 (e0 ⊗ b)
  t -> 1 (t ⊗ e0)
  t -> 1 (e0 ⊗ t)
  t -> 1 (a ⊗ b)
  t -> 1 (b ⊗ a)
";

const CP2: &str = "\
name CP2
frobenius_degree 4
simply_connected true
basis
  e0 0
  p 2
  t 4
unit e0
counit
  e0 1
product
  t t -> 1 t
  t p -> 1 p
  p t -> 1 p
  t e0 -> 1 e0
  e0 t -> 1 e0
  p p -> 1 e0
coproduct
  e0 -> 1 (e0 ⊗ e0)
  p -> 1 (p ⊗ e0)
  p -> 1 (e0 ⊗ p)
  t -> 1 (t ⊗ e0)
  t -> 1 (e0 ⊗ t)
  t -> 1 (p ⊗ p)
";

/// The 7-sphere model enlarged by a contractible pair `d v = u`.
const S7EXT: &str = "\
name S7ext
frobenius_degree 7
simply_connected true
basis
  e0 0
  u 3
  v 4
  t 7
unit e0
counit
  e0 1
d
  v -> 1 u
product
  t t -> 1 t
  t u -> 1 u
  u t -> 1 u
  t v -> 1 v
  v t -> -1 v
  t e0 -> 1 e0
  e0 t -> -1 e0
  u v -> 1 e0
  v u -> -1 e0
coproduct
  e0 -> 1 (e0 ⊗ e0)
  u -> 1 (u ⊗ e0)
  u -> 1 (e0 ⊗ u)
  v -> 1 (v ⊗ e0)
  v -> 1 (e0 ⊗ v)
  t -> 1 (t ⊗ e0)
  t -> 1 (e0 ⊗ t)
  t -> 1 (u ⊗ v)
  t -> 1 (v ⊗ u)
";
