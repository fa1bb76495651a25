# handlers/bench_handler.py
from argparse import Namespace

from services.bench_service import BenchMatrix, run_matrix, save_records, summarize
from utils.errors import InputError, RecolorError
from utils.helpers import failure, parse_int_list, status


class BenchHandler:
    def handle(self, action: str, parsed: Namespace) -> dict:
        try:
            if action == 'bench':
                return self.bench(parsed)
            return {'success': False, 'action': action, 'message': 'Unknown bench action',
                    'exit_code': 1}
        except RecolorError as e:
            status(f"❌ {e}")
            return failure(action, e)

    def bench(self, parsed: Namespace) -> dict:
        try:
            sizes = tuple(parse_int_list(parsed.sizes))
            seeds = tuple(parse_int_list(parsed.seeds))
        except ValueError as e:
            raise InputError(f"bad --sizes/--seeds: {e}") from None
        families = tuple(f.strip() for f in (parsed.families or '').split(',') if f.strip())
        matrix = BenchMatrix(families, sizes, seeds, mode=parsed.mode, k=parsed.colors,
                             d=parsed.d, a=parsed.a, strategy=parsed.strategy)
        status(f"📊 running {len(matrix.rows)} bench rows with {parsed.jobs or 'default'} jobs")

        records = run_matrix(matrix, parsed.jobs)
        summary = summarize(records)
        if parsed.out:
            save_records(records, parsed.out)
            summary['results_file'] = parsed.out
        if summary['failed']:
            status(f"⚠️ {summary['failed']} of {summary['rows']} rows exceeded their bound")
        else:
            status(f"✅ {summary['passed']} rows passed, {summary['skipped']} skipped")
        return {
            'success': summary['failed'] == 0,
            'action': 'bench',
            'data': summary,
            'message': f"{summary['rows']} bench rows",
            'exit_code': 0 if summary['failed'] == 0 else 3,
        }
