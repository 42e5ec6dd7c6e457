use std::io::{self, Write};

use dancing_links::model::ListModel;
use dancing_links::Cdll;

type DemoList = Cdll<8>;

fn show(out: &mut impl Write, label: &str, list: &DemoList) -> io::Result<()> {
    let model = ListModel::abstract_from(list).expect("demo steps keep the list consistent");
    let linked: Vec<String> = model
        .linked
        .iter()
        .map(|(slot, val)| format!("{slot}:{val}"))
        .collect();
    write!(
        out,
        "{label:<12} head={} count={} list=[{}]",
        list.head,
        list.count,
        linked.join(" ")
    )?;
    for (slot, d) in &model.detached {
        write!(out, " detached={slot}:{} prev={} next={}", d.val, d.prev, d.next)?;
    }
    writeln!(out)
}

/// Builds X, Y, Z (plus a fourth node), removes Y, restores it, then
/// exercises the other list operations.
pub fn run(out: &mut impl Write) -> io::Result<()> {
    let mut list = DemoList::new();
    show(out, "new", &list)?;
    for v in [10, 20, 30, 40] {
        list = list.snc(v);
        show(out, &format!("snc {v}"), &list)?;
    }
    list = list.remove(1);
    show(out, "remove 1", &list)?;
    let y = list.nodes[1];
    writeln!(out, "{:<12} prev={} next={} (links kept)", "slot 1", y.prev, y.next)?;
    list = list.restore(1);
    show(out, "restore 1", &list)?;
    list = list.cns(5);
    show(out, "cns 5", &list)?;
    writeln!(out, "{:<12} {}", "nth 2", list.nth(2))?;
    list = list.rst();
    show(out, "rst", &list)?;
    list = list.tsr();
    show(out, "tsr", &list)?;
    Ok(())
}
