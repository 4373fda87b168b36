#!/usr/bin/env python3
"""
nhcalc - Link-homotopy invariants and the homotopy trivializing number

Links are read as pure braids or Habegger-Lin normal forms.
"""
import os
import sys
import argparse
from logging import INFO
from pathlib import Path

# 添加项目根目录到 Python 路径
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from core.config import configure, load_config
from core.errors import InternalInvariantError, NhcalcError
from services.hall_cache_service import HallCacheService
from utils.logger import set_console_level
from utils.output import print_error

# 导入所有命令
from nhcalc_cmd.nh import cmd_nh
from nhcalc_cmd.lambda_ import cmd_lambda
from nhcalc_cmd.mu123 import cmd_mu123
from nhcalc_cmd.comb import cmd_comb
from nhcalc_cmd.hall import cmd_hall
from nhcalc_cmd.witt import cmd_witt
from nhcalc_cmd.znumber import cmd_znumber
from nhcalc_cmd.rz_upper import cmd_rz_upper
from nhcalc_cmd.rz_search import cmd_rz_search
from nhcalc_cmd.c_constant import cmd_c_constant
from nhcalc_cmd.seifert_check import cmd_seifert_check
from nhcalc_cmd.batch import cmd_batch


class _Parser(argparse.ArgumentParser):
    """用法错误属于输入错误, 退出码 1"""

    def error(self, message):
        self.print_usage(sys.stderr)
        print_error(message)
        sys.exit(1)


# ============ Argparse 配置 ============

def _add_global_flags(parser, suppress: bool):
    """全局参数; 子命令上用 SUPPRESS, 避免覆盖写在子命令之前的值"""
    def default(value):
        return argparse.SUPPRESS if suppress else value

    parser.add_argument('--json', action='store_true', default=default(False), help='JSON output')
    parser.add_argument('--seed', type=int, default=default(None), help='Seed for rz-search')
    parser.add_argument('--config', default=default(None), help='TOML config file')
    parser.add_argument('--cache-dir', default=default(None), help='Hall cache directory (overrides NHCALC_HOME)')
    parser.add_argument('--rank-cap', type=int, default=default(None), help='Largest rank for reduced expansions (default: 12)')
    parser.add_argument('--allow-large-rank', action='store_true', default=default(False), help='Allow --rank-cap above 12')
    parser.add_argument('--no-cache', action='store_true', default=default(False), help='Do not use the Hall cache')
    parser.add_argument('-v', '--verbose', action='store_true', default=default(False), help='Log progress to stderr')


def create_parser():
    """Create argument parser"""
    parser = _Parser(
        prog='nhcalc',
        description='Link-homotopy invariants and the homotopy trivializing number n_h',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="Link files: 'strands:<n> A(i,j) ...' braids or 'components:<n>' HL forms.",
    )
    _add_global_flags(parser, suppress=False)
    common = _Parser(add_help=False)
    _add_global_flags(common, suppress=True)

    subparsers = parser.add_subparsers(dest='subcommand', help='Available commands')

    def add(name, help_text):
        return subparsers.add_parser(name, help=help_text, parents=[common])

    add('nh', 'Homotopy trivializing number').add_argument('link_file', help='Braid, HL or JSON link file')
    add('lambda', 'Sum of absolute linking numbers').add_argument('link_file')
    add('mu123', 'Triple linking number (3 components)').add_argument('link_file')
    add('comb', 'Habegger-Lin normal form of a braid').add_argument('braid_file')

    parser_hall = add('hall', 'List basic commutators')
    parser_hall.add_argument('--rank', type=int, required=True)
    parser_hall.add_argument('--weight', type=int, required=True, help='Largest weight')
    parser_hall.add_argument('--nonrepeating', action='store_true', help='Drop commutators repeating a generator')

    parser_witt = add('witt', 'Number of basic commutators of one weight')
    parser_witt.add_argument('--rank', type=int, required=True)
    parser_witt.add_argument('--weight', type=int, required=True)

    add('znumber', 'Trivializing number Z of a word').add_argument('word', help='e.g. "x1 x2 x1^-1 x2^-1"')

    parser_rz = add('rz-upper', 'Upper bound on RZ in RF(rank)')
    parser_rz.add_argument('word')
    parser_rz.add_argument('--rank', type=int, required=True)

    parser_search = add('rz-search', 'Bounded search for a smaller RZ witness')
    parser_search.add_argument('word')
    parser_search.add_argument('--rank', type=int, required=True)
    parser_search.add_argument('--max-len', type=int, default=None, help='Largest witness length (default: config)')
    parser_search.add_argument('--budget', type=int, default=None, help='Expanded nodes (default: config)')

    parser_c = add('c-constant', 'The constant C_n')
    parser_c.add_argument('--n', type=int, required=True)
    parser_c.add_argument('--nonrepeating', action='store_true', help='Count only nonrepeating commutators')
    parser_c.add_argument('--table', action='store_true', help='Both constants for 2..n')

    add('seifert-check', 'Null-form pattern check').add_argument('matrix_file')

    parser_batch = add('batch', 'n_h for every line of a file')
    parser_batch.add_argument('batch_file')
    parser_batch.add_argument('--workers', type=int, default=None, help='Worker threads (default: 4)')

    return parser


def _apply_config(args):
    """配置文件 < 命令行参数"""
    config = load_config(args.config).with_overrides(
        rank_cap=args.rank_cap,
        seed=args.seed,
        cache_dir=Path(args.cache_dir).expanduser() if args.cache_dir else None,
        output_mode="json" if args.json else None,
        use_cache=False if args.no_cache else None,
        allow_large_rank=True if args.allow_large_rank else None,
    )
    configure(config)
    if config.use_cache:
        HallCacheService.install()
    else:
        HallCacheService.uninstall()
    if args.verbose:
        set_console_level(INFO)
    return config


def _dispatch(args) -> int:
    """路由到对应的命令处理函数"""
    if args.subcommand == 'nh':
        return cmd_nh(args)
    elif args.subcommand == 'lambda':
        return cmd_lambda(args)
    elif args.subcommand == 'mu123':
        return cmd_mu123(args)
    elif args.subcommand == 'comb':
        return cmd_comb(args)
    elif args.subcommand == 'hall':
        return cmd_hall(args)
    elif args.subcommand == 'witt':
        return cmd_witt(args)
    elif args.subcommand == 'znumber':
        return cmd_znumber(args)
    elif args.subcommand == 'rz-upper':
        return cmd_rz_upper(args)
    elif args.subcommand == 'rz-search':
        return cmd_rz_search(args)
    elif args.subcommand == 'c-constant':
        return cmd_c_constant(args)
    elif args.subcommand == 'seifert-check':
        return cmd_seifert_check(args)
    elif args.subcommand == 'batch':
        return cmd_batch(args)
    else:
        # 不应该到达这里
        print_error(f"unknown command: {args.subcommand}")
        return 1


# ============ 主入口 ============

def main(argv=None) -> int:
    """Main entry point, returns the exit code"""
    parser = create_parser()
    argv = sys.argv[1:] if argv is None else list(argv)

    # 如果没有参数，显示帮助
    if not argv:
        parser.print_help()
        return 0

    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 1

    # 如果没有识别到命令，显示帮助并退出
    if not args.subcommand:
        parser.print_help()
        return 1

    try:
        _apply_config(args)
        return _dispatch(args)
    except InternalInvariantError as e:
        print_error(f"internal error: {e}")
        return 2
    except AssertionError as e:
        print_error(f"internal assertion failed: {e}")
        return 2
    except (NhcalcError, OSError, ValueError) as e:
        print_error(str(e))
        return 1
    except KeyboardInterrupt:
        print("\n\nOperation canceled", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
