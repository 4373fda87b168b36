"""命令模块 - 导出所有 CLI 命令"""

from .nh import cmd_nh
from .lambda_ import cmd_lambda
from .mu123 import cmd_mu123
from .comb import cmd_comb
from .hall import cmd_hall
from .witt import cmd_witt
from .znumber import cmd_znumber
from .rz_upper import cmd_rz_upper
from .rz_search import cmd_rz_search
from .c_constant import cmd_c_constant
from .seifert_check import cmd_seifert_check
from .batch import cmd_batch

__all__ = [
    'cmd_nh',
    'cmd_lambda',
    'cmd_mu123',
    'cmd_comb',
    'cmd_hall',
    'cmd_witt',
    'cmd_znumber',
    'cmd_rz_upper',
    'cmd_rz_search',
    'cmd_c_constant',
    'cmd_seifert_check',
    'cmd_batch',
]
