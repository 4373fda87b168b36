"""batch command - n_h for every line of a batch file"""
from core.config import BATCH_WORKERS
from services.batch_service import BatchService
from utils.output import emit_lines


def cmd_batch(args) -> int:
    """One JSON record per input line, in input order; failing lines become error records"""
    workers = args.workers or BATCH_WORKERS
    records = BatchService.run_file(args.batch_file, workers)
    emit_lines(record.to_json() for record in records)
    return 0
