//! Bundled end-to-end demonstration on sl(2): averaging operator,
//! induced Leibniz algebra, quadratic form, SDPL splitting by both
//! routes, and the bialgebra/Manin-triple layer, each diffed against
//! bundled golden tables.

use opsplit_core::algebra::{check_relations, RelationSet};
use opsplit_core::averaging::{
    adjoint_map, check_averaging, induced_leibniz, sdpl_from_admissible, AveragingLieAlgebra,
};
use opsplit_core::bialgebra::{
    check_avg_lie_bialgebra, check_avg_lie_bialgebra_via_double, induce_sdpl_bialgebra,
    manin_chain_verdicts, AvgLieBialgebra, Comult,
};
use opsplit_core::leibniz::{check_sdpl, check_type_a, is_left_invariant, sdpl_from_form, TypeARoute};
use opsplit_core::splitting::BilinearForm;

use opsplit_cli::file;

const SL2: &str = include_str!("../assets/sl2.alg.json");
const SL2_LEIBNIZ: &str = include_str!("../assets/sl2-leibniz.alg.json");
const SL2_SPLIT: &str = include_str!("../assets/sl2-split.alg.json");

struct Steps {
    failures: usize,
}

impl Steps {
    fn step(&mut self, name: &str, ok: bool) {
        if ok {
            println!("ok   - {name}");
        } else {
            println!("FAIL - {name}");
            self.failures += 1;
        }
    }
}

pub fn sl2() -> i32 {
    match pipeline() {
        Ok(0) => {
            println!("demo sl2: all golden diffs empty");
            0
        }
        Ok(n) => {
            println!("demo sl2: {n} step(s) failed");
            1
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            2
        }
    }
}

fn pipeline() -> Result<usize, String> {
    let input = file::parse(SL2).map_err(|e| e.to_string())?;
    let golden_leibniz = file::parse(SL2_LEIBNIZ).map_err(|e| e.to_string())?;
    let golden_split = file::parse(SL2_SPLIT).map_err(|e| e.to_string())?;

    let lie = opsplit_core::algebra::Algebra::new(input.dim).with_mult(
        "bracket",
        input
            .mults
            .get("bracket")
            .ok_or("sl2.alg.json: missing bracket")?
            .clone(),
    );
    let p = input.maps.get("p").ok_or("sl2.alg.json: missing P")?.clone();
    let b = BilinearForm::new(input.forms.get("b").ok_or("sl2.alg.json: missing B")?.clone());

    let e = |err: opsplit_core::Error| err.to_string();
    let mut s = Steps { failures: 0 };

    s.step(
        "bracket satisfies the Lie relations",
        check_relations(&lie, "bracket", &RelationSet::lie())
            .map_err(e)?
            .ok,
    );
    s.step("P is an averaging operator", check_averaging(&lie, &p).map_err(e)?);

    let al = AveragingLieAlgebra::new(lie.clone(), p.clone());
    let leib = induced_leibniz(&al).map_err(e)?;
    let golden_circ = golden_leibniz
        .mults
        .get("circ")
        .ok_or("sl2-leibniz.alg.json: missing circ")?;
    s.step(
        "induced Leibniz products match the golden table",
        leib.mult("circ").map_err(e)? == golden_circ,
    );

    s.step(
        "B is symmetric, nondegenerate, and left-invariant",
        b.is_symmetric()
            && b.is_nondegenerate()
            && is_left_invariant(&leib, "circ", &b).map_err(e)?,
    );
    s.step("adjoint of P under B is P itself", adjoint_map(&p, &b).map_err(e)? == p);

    let q = adjoint_map(&p, &b).map_err(e)?;
    let from_avg =
        sdpl_from_admissible(&AveragingLieAlgebra::new(lie.clone(), p.clone()).with_q(q.clone()))
            .map_err(e)?;
    let gsucc = golden_split
        .mults
        .get("succ")
        .ok_or("sl2-split.alg.json: missing succ")?;
    let gprec = golden_split
        .mults
        .get("prec")
        .ok_or("sl2-split.alg.json: missing prec")?;
    s.step(
        "SDPL split from the admissible pair matches the golden table",
        from_avg.succ() == gsucc && from_avg.prec() == gprec,
    );

    let from_form = sdpl_from_form(&leib, "circ", &b).map_err(e)?;
    s.step(
        "SDPL split from the form matches the golden table",
        from_form.succ() == gsucc && from_form.prec() == gprec,
    );

    let split = from_avg.split();
    let routes_ok = check_sdpl(split).map_err(e)?
        && check_type_a(split, TypeARoute::TypeA).map_err(e)?
        && check_type_a(split, TypeARoute::DualTypeB).map_err(e)?
        && check_type_a(split, TypeARoute::Identities).map_err(e)?;
    s.step("split passes check_sdpl and all three type-a routes", routes_ok);

    let bial = AvgLieBialgebra {
        lie,
        delta: Comult::zero(input.dim),
        p,
        q,
    };
    let both_routes = check_avg_lie_bialgebra(&bial).map_err(e)?
        && check_avg_lie_bialgebra_via_double(&bial).map_err(e)?;
    s.step("averaging Lie bialgebra verdict holds on both routes", both_routes);

    let induced = induce_sdpl_bialgebra(&bial).map_err(e)?;
    let sastar = induced.dual_split().map_err(e)?;
    let v = manin_chain_verdicts(induced.sdpl.split(), &sastar).map_err(e)?;
    s.step(
        "all five Manin-triple chain conditions hold",
        v.bialgebra && v.leibniz_manin && v.sdpl_manin && v.double_leibniz && v.double_sdpl,
    );

    Ok(s.failures)
}
