//! Acceptance suite: one test per criterion, each printing a PASS line
//! with its measured runtime. Run with `cargo test --test acceptance`
//! (add `-- --nocapture` to see the lines).

use std::collections::HashSet;
use std::time::Instant;

use num::BigUint;

use wreath_traces::census::{
    census_counts_for_table, char_poly, char_poly_eval_signed_one, enumerate_marked_partitions,
    for_each_marked_partition, is_s_admissible, is_t_admissible, Sign,
};
use wreath_traces::gamma::{table_for, GammaSpec};
use wreath_traces::oracle::{conjugacy_classes_brute, enumerate_wreath, OracleContext};
use wreath_traces::series::{
    class_series, colored_generating_function, supertrace_series, trace_series, ColorSpec,
};

/// The verification grid: every Γ small enough for the full three-way
/// comparison.
fn grid() -> Vec<GammaSpec> {
    let mut specs: Vec<GammaSpec> = (1..=6).map(GammaSpec::Cyclic).collect();
    specs.extend((1..=4).map(GammaSpec::BinaryDihedral));
    specs.extend([
        GammaSpec::BinaryTetrahedral,
        GammaSpec::BinaryOctahedral,
        GammaSpec::BinaryIcosahedral,
    ]);
    specs
}

fn big(n: u64) -> BigUint {
    BigUint::from(n)
}

/// Brute-force partition counter, independent of every generating
/// function in the crate: recursion over the largest allowed part.
fn partitions_brute(n: u64, max_part: u64, odd_only: bool) -> u64 {
    if n == 0 {
        return 1;
    }
    (1..=max_part.min(n))
        .filter(|p| !odd_only || p % 2 == 1)
        .map(|p| partitions_brute(n - p, p, odd_only))
        .sum()
}

#[test]
fn criterion_1_group_tables() {
    let start = Instant::now();
    for n in 1..=12u32 {
        let table = table_for(GammaSpec::Cyclic(n));
        assert_eq!(table.order, n as u64);
        assert_eq!(table.class_count() as u64, n as u64);
        assert_eq!(table.contains_minus_one(), n % 2 == 0, "Z{n} -1 presence");
    }
    for n in 1..=6u32 {
        let table = table_for(GammaSpec::BinaryDihedral(n));
        assert_eq!(table.order, 4 * n as u64);
        assert_eq!(table.class_count() as u64, n as u64 + 3);
        assert!(table.contains_minus_one(), "D{n} contains -1");
    }
    for (spec, order, classes) in [
        (GammaSpec::BinaryTetrahedral, 24, 7),
        (GammaSpec::BinaryOctahedral, 48, 8),
        (GammaSpec::BinaryIcosahedral, 120, 9),
    ] {
        let table = table_for(spec);
        assert_eq!(table.order, order);
        assert_eq!(table.class_count(), classes);
        assert!(table.contains_minus_one());
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 1.0, "took {elapsed:?}, budget 1s");
    println!("criterion 1 (group tables vs reference): PASS in {elapsed:?}");
}

#[test]
fn criterion_2_three_way_counts_match_series() {
    let start = Instant::now();
    for spec in grid() {
        let table = table_for(spec);
        let t_series = trace_series(spec, 8);
        let s_series = supertrace_series(spec, 8);
        let c_series = class_series(spec, 8);
        for n in 0..=8u64 {
            let census = census_counts_for_table(&table, n).unwrap();
            assert_eq!(&census.c, c_series.coeff(n as usize), "{spec} N={n} C");
            assert_eq!(&census.t, t_series.coeff(n as usize), "{spec} N={n} T");
            assert_eq!(&census.s, s_series.coeff(n as usize), "{spec} N={n} S");
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 10.0, "took {elapsed:?}, budget 10s");
    println!("criterion 2 (census = series on the full grid): PASS in {elapsed:?}");
}

#[test]
fn criterion_3_oracle_agreement() {
    let start = Instant::now();
    let cases = [
        (GammaSpec::Cyclic(1), 4),
        (GammaSpec::Cyclic(2), 3),
        (GammaSpec::Cyclic(3), 3),
        (GammaSpec::Cyclic(4), 2),
        (GammaSpec::BinaryDihedral(1), 2),
        (GammaSpec::BinaryDihedral(2), 2),
        (GammaSpec::BinaryTetrahedral, 2),
    ];
    for (spec, n_max) in cases {
        let ctx = OracleContext::new(spec).unwrap();
        for n in 0..=n_max {
            let (c, t, s) = ctx.counts(n, 50_000, 1e-6).unwrap();
            let census = census_counts_for_table(&ctx.table, n as u64).unwrap();
            assert_eq!(big(c), census.c, "{spec} N={n} C");
            assert_eq!(big(t), census.t, "{spec} N={n} T");
            assert_eq!(big(s), census.s, "{spec} N={n} S");

            // classification is constant on brute-force classes and hits
            // every marked partition exactly once
            let elements = enumerate_wreath(&ctx.group, n, 50_000).unwrap();
            let classes = conjugacy_classes_brute(&elements, &ctx.group);
            let mut images = HashSet::new();
            for class in &classes {
                let image = ctx.classify_element(&elements[class[0]]);
                for &member in class {
                    assert_eq!(ctx.classify_element(&elements[member]), image, "{spec} N={n}");
                }
                assert!(images.insert(image), "{spec} N={n}: classes collide");
            }
            let expected: HashSet<_> = enumerate_marked_partitions(&ctx.table, n as u64)
                .into_iter()
                .collect();
            assert_eq!(images, expected, "{spec} N={n} bijection");
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 120.0, "took {elapsed:?}, budget 2min");
    println!("criterion 3 (element-level oracle agreement): PASS in {elapsed:?}");
}

#[test]
fn criterion_4_known_sequences() {
    let start = Instant::now();
    let partition_numbers: Vec<u64> = (0..=10).map(|n| partitions_brute(n, n, false)).collect();
    let odd_partition_counts: Vec<u64> = (0..=10).map(|n| partitions_brute(n, n, true)).collect();
    assert_eq!(
        partition_numbers,
        vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
    );
    assert_eq!(odd_partition_counts, vec![1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10]);

    let z2 = table_for(GammaSpec::Cyclic(2));
    let z1 = table_for(GammaSpec::Cyclic(1));
    let t_z2 = trace_series(GammaSpec::Cyclic(2), 10);
    let s_z1 = supertrace_series(GammaSpec::Cyclic(1), 10);
    for n in 0..=10u64 {
        let expected_t = big(partition_numbers[n as usize]);
        let expected_s = big(odd_partition_counts[n as usize]);
        assert_eq!(census_counts_for_table(&z2, n).unwrap().t, expected_t);
        assert_eq!(t_z2.coeff(n as usize), &expected_t, "T(Z2 wr S_{n})");
        assert_eq!(census_counts_for_table(&z1, n).unwrap().s, expected_s);
        assert_eq!(s_z1.coeff(n as usize), &expected_s, "S(S_{n})");
    }
    let elapsed = start.elapsed();
    println!("criterion 4 (partition-number sequences): PASS in {elapsed:?}");
}

#[test]
fn criterion_5_supertrace_inequalities() {
    let start = Instant::now();
    for spec in grid() {
        let table = table_for(spec);
        let odd_cyclic = matches!(spec, GammaSpec::Cyclic(n) if n % 2 == 1);
        for n in 0..=8u64 {
            let census = census_counts_for_table(&table, n).unwrap();
            assert!(census.s > big(0), "{spec} N={n}: S > 0");
            assert!(census.s >= census.t, "{spec} N={n}: S >= T");
            assert_eq!(
                census.s == census.t,
                table.klein_exists(n),
                "{spec} N={n}: S = T iff Klein operator exists"
            );
            if n >= 1 {
                assert_eq!(
                    census.s == census.t,
                    !odd_cyclic,
                    "{spec} N={n}: equality iff Γ is not odd cyclic"
                );
            }
        }
    }
    // the strict case called out explicitly
    let z3 = census_counts_for_table(&table_for(GammaSpec::Cyclic(3)), 2).unwrap();
    assert_eq!(z3.s, big(8));
    assert_eq!(z3.t, big(5));
    let elapsed = start.elapsed();
    println!("criterion 5 (S > 0, S >= T, Klein equality): PASS in {elapsed:?}");
}

/// Small deterministic PRNG (xorshift64*) so that the 200 random color
/// specs are reproducible without an RNG dependency.
struct Rng(u64);

impl Rng {
    fn next(&mut self, bound: u64) -> u64 {
        self.0 ^= self.0 << 13;
        self.0 ^= self.0 >> 7;
        self.0 ^= self.0 << 17;
        (self.0.wrapping_mul(0x2545F4914F6CDD1D) >> 33) % bound
    }
}

#[test]
fn criterion_6_colored_weight_product_rule() {
    let start = Instant::now();
    let n_max = 40;
    let mut rng = Rng(0x5EED_CAFE);
    let random_spec = |rng: &mut Rng| {
        let len = rng.next(7) as usize;
        ColorSpec {
            prefix: (0..len).map(|_| rng.next(6)).collect(),
            tail: rng.next(4),
        }
    };
    for _ in 0..200 {
        let left_spec = random_spec(&mut rng);
        let right_spec = random_spec(&mut rng);
        let sum = left_spec.add(&right_spec);
        let product = colored_generating_function(&left_spec, n_max)
            .mul(&colored_generating_function(&right_spec, n_max))
            .unwrap();
        assert_eq!(
            colored_generating_function(&sum, n_max),
            product,
            "F(n+m) = F(n)·F(m) for {left_spec:?} + {right_spec:?}"
        );
    }

    // admissible-color specs reproduce the closed forms
    for spec in grid() {
        let table = table_for(spec);
        let c = table.class_count() as u64;
        let t_colors = ColorSpec::constant(table.admissible_counts(1).0);
        assert_eq!(t_colors.tail, c - 1);
        assert_eq!(
            colored_generating_function(&t_colors, n_max),
            trace_series(spec, n_max),
            "{spec}: t colors"
        );
        let s_colors = ColorSpec {
            prefix: (1..=n_max as u64)
                .map(|r| table.admissible_counts(r).1)
                .collect(),
            tail: table.admissible_counts(n_max as u64 + 1).1,
        };
        assert_eq!(
            colored_generating_function(&s_colors, n_max),
            supertrace_series(spec, n_max),
            "{spec}: s colors"
        );
    }
    let elapsed = start.elapsed();
    println!("criterion 6 (colored-weight product rule, 200 specs): PASS in {elapsed:?}");
}

#[test]
fn criterion_7_char_poly_properties() {
    let start = Instant::now();
    for spec in grid() {
        let table = table_for(spec);
        for n in 0..=5u64 {
            for_each_marked_partition(&table, n, |mp| {
                let factors = char_poly(mp, &table);
                assert_eq!(factors.degree(), 2 * n, "{spec} {mp}: degree");
                let coeffs = factors.expand_numeric();
                assert_eq!(coeffs.len() as u64, 2 * n + 1);
                assert!((coeffs[0] - 1.0).abs() < 1e-8, "{spec} {mp}: value at 0");
                for (i, c) in coeffs.iter().enumerate() {
                    let mirrored = coeffs[coeffs.len() - 1 - i];
                    assert!(
                        (c - mirrored).abs() < 1e-8,
                        "{spec} {mp}: palindromic coefficients"
                    );
                }
                // zero flags at ±1 match the admissibility predicates, and
                // the numeric values match direct evaluation
                for (sign, lambda, admissible) in [
                    (Sign::Plus, 1.0f64, is_t_admissible(mp, &table)),
                    (Sign::Minus, -1.0f64, is_s_admissible(mp, &table)),
                ] {
                    let (is_zero, value) = char_poly_eval_signed_one(&factors, sign);
                    assert_eq!(is_zero, !admissible, "{spec} {mp}: zero flag");
                    let direct: f64 = coeffs
                        .iter()
                        .enumerate()
                        .map(|(i, c)| c * lambda.powi(i as i32))
                        .sum();
                    assert!(
                        (value - direct).abs() < 1e-8,
                        "{spec} {mp}: value {value} vs direct {direct}"
                    );
                }
            });
        }
    }
    let elapsed = start.elapsed();
    println!("criterion 7 (characteristic-polynomial properties): PASS in {elapsed:?}");
}

#[test]
fn criterion_8_n_zero_conventions() {
    let start = Instant::now();
    for spec in grid() {
        let table = table_for(spec);
        let census = census_counts_for_table(&table, 0).unwrap();
        assert_eq!(census.c, big(1), "{spec}: C at N=0");
        assert_eq!(census.t, big(1), "{spec}: T at N=0");
        assert_eq!(census.s, big(1), "{spec}: S at N=0");
        assert!(table.klein_exists(0), "{spec}: Klein operator at N=0");
        assert_eq!(
            enumerate_marked_partitions(&table, 0).len(),
            1,
            "{spec}: single empty partition at N=0"
        );
    }
    let elapsed = start.elapsed();
    println!("criterion 8 (N = 0 conventions): PASS in {elapsed:?}");
}
