# handlers/oracle_handler.py
from argparse import Namespace

from services.oracle_service import bfs_distance, exact_diameter, is_connected
from utils.codec import instance_for, load_colouring, load_graph
from utils.errors import InputError, RecolorError
from utils.helpers import failure, status


class OracleHandler:
    def handle(self, action: str, parsed: Namespace) -> dict:
        """Brute-force answers over the reconfiguration graph."""
        try:
            gf = load_graph(parsed.graph)
            inst = instance_for(gf, parsed.colors, None)
            if action == 'distance':
                if not parsed.alpha or not parsed.beta:
                    raise InputError("oracle distance needs --alpha and --beta")
                result = bfs_distance(inst, load_colouring(parsed.alpha),
                                      load_colouring(parsed.beta), parsed.cap)
            elif action == 'diameter':
                result = exact_diameter(inst, parsed.cap)
            elif action == 'connected':
                result = is_connected(inst, parsed.cap)
            else:
                return {'success': False, 'action': action, 'message': 'Unknown oracle action',
                        'exit_code': 1}
        except RecolorError as e:
            status(f"❌ {e}")
            return failure(action, e)

        if result.ok:
            status(f"✅ {action}: {result.value} ({result.visited} states)")
        else:
            status(f"⚠️ {action}: {result.status} after {result.visited} states")
        return {'success': True, 'action': action, 'data': result.to_dict(),
                'message': result.status, 'exit_code': 0}
