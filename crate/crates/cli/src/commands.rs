use serde::Serialize;
use serde_json::json;

use tableau_dynamics::dynamics::{dual_evacuate, evacuate, orbit, promote, promote_inverse, Direction};
use tableau_dynamics::growth::{build_window, column_evacuation, dis};
use tableau_dynamics::homomesy::{
    symmetric_rectangle_subsets, symmetric_subsets, verify_homomesy, CellStatistic, DynamicalSystem, HomomesyReport,
    IncreasingSystem, LinearExtensionSystem, SsytSystem,
};
use tableau_dynamics::ktableaux::{
    inc3_rectangle_counterexample, k_evacuate, k_promote, k_promote_inverse, IncreasingTableau,
};
use tableau_dynamics::paths::{flow_multisets, interval_decomposition, promotion_path, trajectory, LabeledPath};
use tableau_dynamics::posets::{count_linear_extensions, render_labels, rotate, CominusculeFamily, FinitePoset};
use tableau_dynamics::{Cell, Error, Partition, Result, Tableau, TableauKind};

use crate::input::{load_poset, load_tableau, parse_cells, parse_elements, parse_partition, parse_rectangle};
use crate::{Cli, Command, Format, HomomesyArgs, Outcome, TableauSource};

fn emit_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable output"));
}

fn semistandard(source: &TableauSource) -> Result<Tableau> {
    let t = load_tableau(source.tableau.as_deref(), source.input.as_deref(), source.ceiling)?;
    if !t.is_straight() {
        return Err(Error::NotStraight);
    }
    if !t.validate(TableauKind::Semistandard) {
        return Err(Error::InvalidTableau { kind: "semistandard" });
    }
    Ok(t)
}

fn increasing(source: &TableauSource) -> Result<(FinitePoset, IncreasingTableau)> {
    let t = load_tableau(source.tableau.as_deref(), source.input.as_deref(), source.ceiling)?;
    if !t.is_straight() {
        return Err(Error::NotStraight);
    }
    let p = FinitePoset::ferrers(&t.outer());
    let inc = IncreasingTableau::from_tableau(&p, &t)?;
    Ok((p, inc))
}

fn path_text(path: &LabeledPath) -> String {
    let boxes: Vec<String> = path.boxes.iter().map(Cell::to_string).collect();
    let labels: Vec<String> = path.labels.iter().map(u32::to_string).collect();
    format!("{}; {}", boxes.join(","), labels.join(","))
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    let json = cli.format == Format::Json;
    match &cli.command {
        Command::Promote { source, inverse, times } => {
            let t = semistandard(source)?;
            let mut out = t.clone();
            for _ in 0..*times {
                out = if *inverse { promote_inverse(&out) } else { promote(&out) };
            }
            if json {
                emit_json(&json!({ "input": t, "output": out }));
            } else {
                print!("{out}");
            }
        }
        Command::Evacuate { source, dual } => {
            let t = semistandard(source)?;
            let out = if *dual { dual_evacuate(&t)? } else { evacuate(&t) };
            if json {
                emit_json(&json!({ "input": t, "output": out }));
            } else {
                print!("{out}");
            }
        }
        Command::Orbit { source } => {
            let t = semistandard(source)?;
            let o = orbit(&t, Direction::Promote);
            // list from the input, not from the canonical representative
            let start = o
                .elements()
                .iter()
                .position(|x| *x == t)
                .expect("orbit contains its start");
            let mut elements = o.elements().to_vec();
            elements.rotate_left(start);
            if json {
                emit_json(&json!({ "period": elements.len(), "orbit": elements }));
            } else {
                println!("period {}", elements.len());
                for x in &elements {
                    println!("{}", x.to_inline());
                }
            }
        }
        Command::Growth { source, height, mark } => {
            let t = semistandard(source)?;
            let height = height.unwrap_or(t.ceiling() as usize + 1);
            let mark = match mark {
                Some(m) => parse_cells(m)?.first().copied(),
                None => None,
            };
            let w = build_window(&t, height);
            let evac = column_evacuation(&w, 0).ok();
            if json {
                let rows: Vec<Vec<String>> = w
                    .rows()
                    .iter()
                    .map(|r| r.diagrams().iter().map(|d| d.to_string()).collect())
                    .collect();
                emit_json(&json!({ "rows": rows, "column_evacuation": evac }));
            } else {
                print!("{}", w.render(mark));
                if let Some(e) = evac {
                    println!("column evacuation: {}", e.to_inline());
                }
            }
        }
        Command::Dis { source, cells } => {
            let t = semistandard(source)?;
            let cells = match cells {
                Some(c) => parse_cells(c)?,
                None => t.outer().boxes().collect(),
            };
            let e = evacuate(&t);
            let mut rows = Vec::new();
            for b in cells {
                let (d, de) = (dis(&t, b)?, dis(&e, b)?);
                rows.push(json!({ "box": b, "dis": d, "dis_of_evacuation": de, "equal": d == de }));
                if !json {
                    let flag = if d == de { "" } else { "  differs" };
                    println!("{b} dis(T)={d} dis(E(T))={de}{flag}");
                }
            }
            if json {
                emit_json(&rows);
            }
        }
        Command::Paths { source, cells } => {
            let t = semistandard(source)?;
            let rho = promotion_path(&t)?;
            let tau = trajectory(&t)?;
            let cells = match cells {
                Some(c) => parse_cells(c)?,
                None => t.outer().boxes().collect(),
            };
            let mut flows = Vec::new();
            for b in cells {
                let f = flow_multisets(&t, b)?;
                let iv = interval_decomposition(&t, b)?;
                flows.push((f, iv));
            }
            if json {
                let flows: Vec<_> = flows
                    .iter()
                    .map(|(f, iv)| json!({ "box": f.cell, "inn": f.inn, "out": f.out, "intervals": iv }))
                    .collect();
                emit_json(&json!({ "promotion_path": rho, "trajectory": tau, "flows": flows }));
            } else {
                println!("rho: {}", path_text(&rho));
                println!("tau: {}", path_text(&tau));
                for (f, iv) in flows {
                    let iv: Vec<String> = iv.iter().map(|(a, b)| format!("[{a},{b}]")).collect();
                    println!("{} inn={} out={} intervals={}", f.cell, f.inn, f.out, iv.join(" "));
                }
            }
        }
        Command::Kpromote { source, inverse } => {
            let (p, t) = increasing(source)?;
            let out = if *inverse {
                k_promote_inverse(&p, &t)
            } else {
                k_promote(&p, &t)
            };
            let out = out.to_tableau(&p)?;
            if json {
                emit_json(&json!({ "input": t.to_tableau(&p)?, "output": out }));
            } else {
                print!("{out}");
            }
        }
        Command::Kevacuate { source } => {
            let (p, t) = increasing(source)?;
            let out = k_evacuate(&p, &t)?.to_tableau(&p)?;
            if json {
                emit_json(&json!({ "input": t.to_tableau(&p)?, "output": out }));
            } else {
                print!("{out}");
            }
        }
        Command::Homomesy(args) => return homomesy(args, json),
        Command::Counterexample => {
            let r = inc3_rectangle_counterexample()?;
            if json {
                emit_json(&r);
            } else {
                let support: Vec<String> = r.support.iter().map(Cell::to_string).collect();
                println!("S = {{{}}}", support.join(","));
                for o in [&r.first, &r.second] {
                    println!("orbit of {} (size {})", o.start, o.size);
                    for (x, v) in o.orbit.iter().zip(&o.values) {
                        println!("  {x}  sigma={v}");
                    }
                    println!("  average {}", o.average);
                }
            }
            return Ok(if r.averages_differ() {
                Outcome::Violated
            } else {
                Outcome::Done
            });
        }
        Command::Families { family } => families(family.as_deref(), json)?,
    }
    Ok(Outcome::Done)
}

fn families(family: Option<&str>, json: bool) -> Result<()> {
    let list: Vec<CominusculeFamily> = match family {
        Some(f) => vec![f.parse()?],
        None => vec![
            CominusculeFamily::Rectangle { rows: 3, cols: 5 },
            CominusculeFamily::ShiftedStaircase { n: 6 },
            CominusculeFamily::Propeller { n: 7 },
            CominusculeFamily::Cayley,
            CominusculeFamily::Freudenthal,
        ],
    };
    let mut entries = Vec::new();
    for f in list {
        let p = f.build()?;
        let r = rotate(&p)?;
        let extensions = count_linear_extensions(&p);
        let rotate_ok = r.is_involution() && r.is_order_reversing(&p);
        let labels: Vec<u32> = (1..=p.size() as u32).collect();
        let diagram = render_labels(&p, &vec![0; p.size()]).replace('0', "#");
        if json {
            entries.push(json!({
                "family": f.to_string(),
                "elements": p.size(),
                "covers": p.covers().len(),
                "linear_extensions": extensions.to_string(),
                "rotate_order_reversing_involution": rotate_ok,
            }));
        } else {
            println!(
                "{f}: {} elements, {} covers, {extensions} linear extensions, rotate ok: {rotate_ok}",
                p.size(),
                p.covers().len()
            );
            print!("{diagram}");
            if family.is_some() {
                print!("{}", render_labels(&p, &labels));
                print!("{p}");
            }
        }
    }
    if json {
        emit_json(&entries);
    }
    Ok(())
}

fn support_list(
    args: &HomomesyArgs,
    symmetric: impl FnOnce() -> Result<Vec<CellStatistic>>,
) -> Result<Vec<CellStatistic>> {
    let given = [args.symmetric_all, args.cells.is_some(), args.elements.is_some()]
        .iter()
        .filter(|&&b| b)
        .count();
    if given != 1 {
        return Err(Error::Parse {
            line: 1,
            message: "give exactly one of --cells, --elements, --symmetric-all".into(),
        });
    }
    if args.symmetric_all {
        return symmetric();
    }
    if let Some(c) = &args.cells {
        return Ok(vec![CellStatistic::cells(parse_cells(c)?)]);
    }
    Ok(vec![CellStatistic::elements(parse_elements(
        args.elements.as_deref().unwrap_or_default(),
    )?)])
}

fn sweep<D: DynamicalSystem>(system: &D, stats: &[CellStatistic], budget: usize) -> Result<Vec<HomomesyReport>> {
    stats.iter().map(|s| verify_homomesy(system, s, budget)).collect()
}

fn homomesy(args: &HomomesyArgs, json: bool) -> Result<Outcome> {
    let sources = [
        args.shape.is_some(),
        args.partition.is_some(),
        args.family.is_some(),
        args.poset.is_some(),
    ]
    .iter()
    .filter(|&&b| b)
    .count();
    if sources != 1 {
        return Err(Error::Parse {
            line: 1,
            message: "give exactly one of --shape, --partition, --family, --poset".into(),
        });
    }
    let rectangle = args.shape.as_deref().map(parse_rectangle).transpose()?;
    let (poset, name): (Option<FinitePoset>, String) = if let Some((m, n)) = rectangle {
        let f = CominusculeFamily::Rectangle { rows: m, cols: n };
        (Some(f.build()?), f.to_string())
    } else if let Some(f) = &args.family {
        let f: CominusculeFamily = f.parse()?;
        (Some(f.build()?), f.to_string())
    } else if let Some(path) = &args.poset {
        (Some(load_poset(path)?), path.clone())
    } else {
        let shape = parse_partition(args.partition.as_deref().unwrap_or_default())?;
        (Some(FinitePoset::ferrers(&shape)), shape.to_string())
    };
    let poset = poset.expect("one source given");
    let symmetric = |p: &FinitePoset| -> Result<Vec<CellStatistic>> { symmetric_subsets(p) };

    let reports = if let Some(q) = args.deficiency {
        let stats = support_list(args, || symmetric(&poset))?;
        sweep(&IncreasingSystem::new(poset, q, name), &stats, args.budget)?
    } else if let Some(k) = args.ceiling {
        let shape = match (rectangle, &args.partition) {
            (Some((m, n)), _) => Partition::rectangle(m, n),
            (None, Some(p)) => parse_partition(p)?,
            _ => {
                return Err(Error::Parse {
                    line: 1,
                    message: "-k applies to --shape or --partition".into(),
                })
            }
        };
        let stats = support_list(args, || {
            let (m, n) = shape.rectangle_dims().ok_or(Error::NotRectangular)?;
            Ok(symmetric_rectangle_subsets(m, n))
        })?;
        sweep(&SsytSystem { shape, ceiling: k }, &stats, args.budget)?
    } else {
        let stats = support_list(args, || symmetric(&poset))?;
        sweep(&LinearExtensionSystem::new(poset, name), &stats, args.budget)?
    };

    let violated = reports.iter().any(|r| !r.is_homomesic());
    if json {
        if args.symmetric_all {
            emit_json(&reports);
        } else {
            emit_json(&reports[0]);
        }
    } else {
        for r in &reports {
            print_report(r);
        }
    }
    Ok(if violated { Outcome::Violated } else { Outcome::Done })
}

fn print_report(r: &HomomesyReport) {
    println!("system: {}", r.system);
    println!("statistic: {}", r.statistic);
    println!("orbits: {} ({} states)", r.orbits.len(), r.total_states());
    for o in &r.orbits {
        println!(
            "  size {:>3}  average {:>8}  {}",
            o.size,
            o.average.to_string(),
            o.representative
        );
    }
    match (&r.witness, r.common_average()) {
        (_, Some(avg)) => println!("verdict: homomesic, common average {avg}"),
        (Some(w), None) => println!(
            "verdict: violated, orbit {} averages {} but orbit {} averages {}",
            w.orbits[0] + 1,
            w.averages[0],
            w.orbits[1] + 1,
            w.averages[1]
        ),
        (None, None) => println!("verdict: homomesic"),
    }
}
