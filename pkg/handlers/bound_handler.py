# handlers/bound_handler.py
from argparse import Namespace

from services.bound_service import BoundParams, bound_recursion, theorem_bound, transform_k_bound
from utils.errors import RecolorError
from utils.helpers import failure, status


class BoundHandler:
    def handle(self, action: str, parsed: Namespace) -> dict:
        try:
            if action == 'bound':
                return self.bound(parsed)
            return {'success': False, 'action': action, 'message': 'Unknown bound action',
                    'exit_code': 1}
        except RecolorError as e:
            status(f"❌ {e}")
            return failure(action, e)

    def bound(self, parsed: Namespace) -> dict:
        params = BoundParams(parsed.n, parsed.colors, a=parsed.a, d=parsed.d, epsilon=parsed.epsilon)
        report = theorem_bound(params)
        data = report.to_dict()
        data['n'] = params.n
        data['k'] = params.k
        if params.a is not None:
            data['recursion'] = bound_recursion(params.n, params.k, params.a)
        elif report.value is not None:
            data['engine_bounds'] = {
                strategy: transform_k_bound(params.n, params.k, params.d, strategy)
                for strategy in ('forget', 'direct')
            }
        status(f"📊 {report.case}: {report.value}")
        return {'success': True, 'action': 'bound', 'data': data,
                'message': f"{report.case} regime", 'exit_code': 0}
