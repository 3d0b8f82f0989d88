from .models   import NetworkSpec
from .mlp      import Network, init_network
from .response import ResponseMap, response_map

__all__ = ['NetworkSpec', 'Network', 'init_network', 'ResponseMap', 'response_map']
