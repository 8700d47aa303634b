//! LP-format export of the MILP model. Output is byte-stable for a fixed
//! network: variables and constraints are emitted in id order, strict
//! inequalities are already encoded as `<= rhs - 1`, and the big-M is the
//! literal vertex count.

use std::fmt::Write;

use crate::solver::{MilpModel, Sense, VarKind};

fn write_terms(out: &mut String, terms: &[(i64, usize)], model: &MilpModel) {
    if terms.is_empty() {
        out.push('0');
        return;
    }
    for (i, &(coeff, var)) in terms.iter().enumerate() {
        let name = &model.vars[var].name;
        if i == 0 {
            match coeff {
                1 => write!(out, "{name}"),
                -1 => write!(out, "- {name}"),
                c => write!(out, "{c} {name}"),
            }
            .unwrap();
        } else {
            let sign = if coeff < 0 { '-' } else { '+' };
            match coeff.abs() {
                1 => write!(out, " {sign} {name}"),
                c => write!(out, " {sign} {c} {name}"),
            }
            .unwrap();
        }
    }
}

/// Renders the model with sections Minimize / Subject To / Bounds /
/// Binaries / General.
pub fn write_lp(model: &MilpModel) -> String {
    let mut out = String::new();
    out.push_str("Minimize\n obj: ");
    write_terms(&mut out, &model.objective, model);
    out.push_str("\nSubject To\n");
    for c in &model.constraints {
        write!(out, " {}: ", c.name).unwrap();
        write_terms(&mut out, &c.terms, model);
        let op = match c.sense {
            Sense::Le => "<=",
            Sense::Ge => ">=",
        };
        writeln!(out, " {op} {}", c.rhs).unwrap();
    }
    out.push_str("Bounds\n");
    for v in &model.vars {
        if v.kind == VarKind::Nonnegative {
            writeln!(out, " {} >= 0", v.name).unwrap();
        }
    }
    out.push_str("Binaries\n");
    for v in model.binaries() {
        writeln!(out, " {}", v.name).unwrap();
    }
    out.push_str("General\nEnd\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::solver::build_milp;

    #[test]
    fn n_blob_export_is_byte_stable_with_expected_shape() {
        let net = fixtures::n_blob();
        let model = build_milp(&net);
        let text = write_lp(&model);
        assert_eq!(text, write_lp(&model));

        assert!(text.starts_with("Minimize\n obj: h_v5 + h_v6\nSubject To\n"));
        assert!(text.contains(" c1_5: x_a4 + x_a5 - h_v5 <= 1\n"));
        assert!(text.contains(" c1_6: x_a6 + x_a7 - h_v6 <= 1\n"));
        assert!(text.contains(" c2_4: x_a5 + x_a6 >= 1\n"));
        assert!(text.contains(" c2_5: x_a7 >= 1\n"));
        // Big-M is the vertex count, 8.
        assert!(text.contains(" c6_5_6: l_v5 - l_v6 + 8 x_a7 <= 7\n"));
        assert!(text.contains(" c7_5_6: l_v5 - l_v6 + 8 x_a7 >= 0\n"));
        assert!(text.ends_with("General\nEnd\n"));

        let binaries = text
            .split("Binaries\n")
            .nth(1)
            .unwrap()
            .split("General")
            .next()
            .unwrap();
        assert_eq!(binaries.split_whitespace().count(), 6); // 4 x + 2 h
    }

    #[test]
    fn tree_export_has_zero_objective_and_no_binaries() {
        let model = build_milp(&fixtures::caterpillar_tree());
        let text = write_lp(&model);
        assert!(text.starts_with("Minimize\n obj: 0\n"));
        assert!(text.contains("Binaries\nGeneral\n"));
    }

    #[test]
    fn single_leaf_export_has_only_label_constraints() {
        let model = build_milp(&fixtures::single_leaf("x"));
        let text = write_lp(&model);
        for family in ["c1_", "c2_", "c3_", "c6_", "c7_"] {
            assert!(!text.contains(family), "unexpected {family}");
        }
        assert!(text.contains(" c4_0_1: l_v0 - l_v1 <= 0\n"));
        assert!(text.contains(" c5_0_1: l_v0 - l_v1 <= -1\n"));
    }
}
