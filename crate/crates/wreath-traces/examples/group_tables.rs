//! Build each family of finite subgroups of Sp(2, C) and print its
//! conjugacy-class table, cross-checking the formulaic tables against
//! brute-force orbit enumeration.
//!
//! ```bash
//! cargo run --example group_tables
//! ```

use wreath_traces::gamma::{brute_force_class_table, build_group, class_table, GammaSpec};

fn main() {
    let specs = [
        GammaSpec::Cyclic(4),
        GammaSpec::Cyclic(5),
        GammaSpec::BinaryDihedral(3),
        GammaSpec::BinaryTetrahedral,
        GammaSpec::BinaryOctahedral,
        GammaSpec::BinaryIcosahedral,
    ];

    for spec in specs {
        let table = class_table(spec);
        println!(
            "{spec}: order {}, {} classes, contains -1: {}",
            table.order,
            table.class_count(),
            table.contains_minus_one()
        );
        for class in &table.classes {
            println!(
                "  {}  size {:>3}  element order {:>3}  eigenvalue angle {}{}{}",
                table.label(class.id),
                class.size,
                class.element_order,
                class.angle,
                if class.is_identity { "  (identity)" } else { "" },
                if class.is_minus_one { "  (-1)" } else { "" },
            );
        }

        // the slow path agrees: conjugation orbits on the explicit group
        let group = build_group(spec).expect("group fits in memory");
        let brute = brute_force_class_table(&group);
        let key = |t: &wreath_traces::GammaClassTable| {
            let mut v: Vec<_> = t
                .classes
                .iter()
                .map(|c| (c.element_order, c.angle, c.size))
                .collect();
            v.sort();
            v
        };
        assert_eq!(key(&table), key(&brute));
        println!("  brute-force orbit enumeration agrees ({} elements)\n", group.order());
    }
}
