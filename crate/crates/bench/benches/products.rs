//! Benchmarks for the hot paths: shuffle enumeration, the weighted products,
//! and the universal map.

use criterion::{black_box, criterion_group, criterion_main, Criterion};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use mixshuffle_core::baxter::{augmented_product, universal_map, AlgebraHom};
use mixshuffle_core::cartier::{cartier_product, embed_cartier};
use mixshuffle_core::hurwitz::{hurwitz_mul, HurwitzAlgebra};
use mixshuffle_core::monomial::Alphabet;
use mixshuffle_core::ring::{RingDescriptor, Weight};
use mixshuffle_core::sample::{
    random_bax_element, random_cartier_element, random_hurwitz, SampleSpec,
};
use mixshuffle_core::shuffle::{
    count_mixable_pair, enumerate_mixable_pair, enumerate_mixable_triple,
};
use mixshuffle_core::tensor::{mixable_product_plus, PlusElement, PlusWord};

fn enumeration(c: &mut Criterion) {
    c.bench_function("enumerate_mixable_pair_5_5", |b| {
        b.iter(|| enumerate_mixable_pair(black_box(5), black_box(5)))
    });
    c.bench_function("enumerate_mixable_triple_3_3_3", |b| {
        b.iter(|| enumerate_mixable_triple(black_box(3), black_box(3), black_box(3)))
    });
    c.bench_function("count_mixable_pair_30_30", |b| {
        b.iter(|| count_mixable_pair(black_box(30), black_box(30)))
    });
}

fn products(c: &mut Criterion) {
    let ring = RingDescriptor::Int;
    let alphabet = Alphabet::new(["x", "y", "z"]).unwrap();
    let w = Weight::of_i64(&ring, -1);
    let spec = SampleSpec {
        max_word_len: 3,
        max_terms: 3,
        coeff_bound: 3,
        max_exp: 2,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(1);

    let plus_words: Vec<PlusElement> = (0..2)
        .map(|_| {
            PlusElement::from_word(
                ring.clone(),
                alphabet.clone(),
                PlusWord::new(vec![
                    mixshuffle_core::monomial::Monomial::generator(0),
                    mixshuffle_core::monomial::Monomial::generator(1),
                    mixshuffle_core::monomial::Monomial::generator(2),
                ]),
            )
        })
        .collect();
    c.bench_function("plus_product_3x3_words", |b| {
        b.iter(|| mixable_product_plus(&plus_words[0], &plus_words[1], &w).unwrap())
    });

    let x = random_bax_element(&mut rng, &ring, &alphabet, &spec);
    let y = random_bax_element(&mut rng, &ring, &alphabet, &spec);
    c.bench_function("augmented_product_random", |b| {
        b.iter(|| augmented_product(&x, &y, &w).unwrap())
    });

    let a = random_cartier_element(&mut rng, &ring, &alphabet, &spec);
    let bb = random_cartier_element(&mut rng, &ring, &alphabet, &spec);
    c.bench_function("cartier_product_random", |b| {
        b.iter(|| cartier_product(&a, &bb).unwrap())
    });
    c.bench_function("cartier_embed_random", |b| b.iter(|| embed_cartier(&a)));

    let h1 = random_hurwitz(&mut rng, &ring, 16, 5);
    let h2 = random_hurwitz(&mut rng, &ring, 16, 5);
    c.bench_function("hurwitz_mul_len_16", |b| {
        b.iter(|| hurwitz_mul(&h1, &h2).unwrap())
    });
}

fn universal(c: &mut Criterion) {
    let ring = RingDescriptor::Int;
    let alphabet = Alphabet::new(["x", "y"]).unwrap();
    let w = Weight::of_i64(&ring, 0);
    let target = HurwitzAlgebra::new(ring.clone());
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let images = vec![
        random_hurwitz(&mut rng, &ring, 3, 3),
        random_hurwitz(&mut rng, &ring, 3, 3),
    ];
    let hom = AlgebraHom::new(&target, alphabet.clone(), images).unwrap();
    let spec = SampleSpec {
        max_word_len: 3,
        max_terms: 3,
        coeff_bound: 3,
        max_exp: 2,
    };
    let elem = random_bax_element(&mut rng, &ring, &alphabet, &spec);
    c.bench_function("universal_map_into_shift_target", |b| {
        b.iter(|| universal_map(&hom, &elem, &w).unwrap())
    });
}

criterion_group!(benches, enumeration, products, universal);
criterion_main!(benches);
