"""c-constant command - The constant C_n in Lambda <= n_h <= Lambda + C_n"""
from algebra.hall import c_constant, c_constant_table
from utils.output import emit


def cmd_c_constant(args) -> int:
    if args.table:
        table = c_constant_table(args.n)
        lines = [f"n={row['n']}  unfiltered={row['unfiltered']}  nonrepeating={row['nonrepeating']}" for row in table]
        emit({"table": table}, "\n".join(lines))
        return 0
    value = c_constant(args.n, args.nonrepeating)
    emit({"n": args.n, "nonrepeating": args.nonrepeating, "c": value}, str(value))
    return 0
