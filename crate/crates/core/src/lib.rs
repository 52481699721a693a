//! Exact computer algebra for mixable shuffle products and free Baxter
//! algebra constructions.
//!
//! The crate provides, bottom up:
//!
//! - exact coefficient rings (integers, rationals, integers mod n) with a
//!   distinguished weight element ([`ring`]);
//! - enumeration and closed-form counting of two- and three-block shuffles
//!   with merge positions ([`shuffle`]), plus the set-vector model used as an
//!   independent oracle ([`set_shuffle`]);
//! - tensor words over a free commutative monoid of monomials and the
//!   weighted mixable shuffle product ([`monomial`], [`tensor`]);
//! - the free Baxter algebra with its augmented product, prefixing operator
//!   and universal map into arbitrary targets ([`baxter`]);
//! - the identity-free bracket-symbol model of weight minus one and its
//!   embedding ([`cartier`]);
//! - Hurwitz polynomials under binomial convolution with the shift operator,
//!   the weight-zero target ([`hurwitz`]);
//! - deterministic random element generation for the identity suites
//!   ([`sample`]).

pub mod baxter;
pub mod cartier;
pub mod error;
pub mod hurwitz;
pub mod monomial;
pub mod ring;
pub mod sample;
pub mod set_shuffle;
pub mod shuffle;
pub mod tensor;

pub use baxter::{
    augmented_product, baxter_operator, check_baxter_identity, check_product_expansion,
    functor_map, generator_span_words, universal_map, AlgebraHom, BaxElement, BaxWord,
    BaxterAlgebra, CheckOutcome, IdentityOperatorAlgebra, PolyMap, ScalarOperatorAlgebra,
    ShuffleBaxterAlgebra, ZeroOperatorAlgebra,
};
pub use cartier::{
    cartier_operator, cartier_product, embed_cartier, enumerate_cartier_triples, factor_through,
    CartierElement, CartierSymbol, CartierTriple,
};
pub use error::Error;
pub use hurwitz::{
    embed_sha_c, hurwitz_mul, hurwitz_shift, one_tensor_product, one_tensor_product_expanded,
    HurwitzAlgebra, HurwitzPolynomial,
};
pub use monomial::{Alphabet, Monomial, Polynomial};
pub use ring::{binomial, binomial_int, binomial_signed, Coeff, RingDescriptor, Weight};
pub use set_shuffle::{
    apply_mixable, apply_mixable_triple, mixable_shuffle_set, mixable_shuffle_set_direct,
    mixable_shuffle_set_nested_left, mixable_shuffle_set_nested_right, mixable_shuffle_set_triple,
    SetVector,
};
pub use shuffle::{
    admissible_pairs, count_mixable_pair, count_mixable_pair_by_merges, count_mixable_triple,
    count_mixable_triple_by_degree, enumerate_mixable_pair, enumerate_mixable_triple,
    enumerate_pair_shuffles, enumerate_triple_shuffles, merge_candidates, partition_dec,
    MergeClass, MergeEntry, MixablePairShuffle, MixableTripleShuffle, PairShuffle, Perm,
    TripleShuffle,
};
pub use tensor::{
    apply_mixable_to_tensor, mixable_product_plus, mixable_product_plus_symbolic, LambdaPoly,
    PlusElement, PlusWord, SymbolicPlusElement,
};

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_send_sync<T: Send + Sync>() {}

    #[test]
    fn values_transfer_between_threads() {
        assert_send_sync::<Coeff>();
        assert_send_sync::<Weight>();
        assert_send_sync::<Alphabet>();
        assert_send_sync::<Monomial>();
        assert_send_sync::<MixablePairShuffle>();
        assert_send_sync::<MixableTripleShuffle>();
        assert_send_sync::<SetVector>();
        assert_send_sync::<PlusElement>();
        assert_send_sync::<BaxElement>();
        assert_send_sync::<CartierElement>();
        assert_send_sync::<HurwitzPolynomial>();
    }
}
