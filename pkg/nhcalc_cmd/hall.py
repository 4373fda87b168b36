"""hall command - List a Hall basis of basic commutators"""
from algebra.hall import get_basis
from utils.output import emit


def cmd_hall(args) -> int:
    basis = get_basis(args.rank, args.weight, args.nonrepeating)
    counts = basis.count_by_weight()
    data = {
        "rank": basis.rank,
        "max_weight": basis.max_weight,
        "nonrepeating": basis.nonrepeating,
        "elements": basis.to_json(),
        "counts": {str(w): counts.get(w, 0) for w in range(1, basis.max_weight + 1)},
    }
    lines = [f"{k + 1:>4}  w={c.weight}  {c}" for k, c in enumerate(basis)]
    lines.append(f"total: {len(basis)}")
    emit(data, "\n".join(lines))
    return 0
