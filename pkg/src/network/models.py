# vim:tabstop=4:softtabstop=4:shiftwidth=4:textwidth=79:expandtab:autoindent:smartindent:fileformat=unix:

from dataclasses        import dataclass
from typing             import List, Tuple
from ..utils.exceptions import ConfigError

@dataclass(frozen=True)
class NetworkSpec:
    """Fully-connected ReLU network shape"""
    input_length: int
    hidden_layers: Tuple[int, ...] = (50,)
    outputs: int = 1

    def __post_init__(self):
        """
        Validate configuration after initialization

        Raises:
            ConfigError: If any width is smaller than 1
        """
        object.__setattr__(self, 'hidden_layers', tuple(int(w) for w in self.hidden_layers))
        widths = [self.input_length, *self.hidden_layers, self.outputs]
        if any(not isinstance(w, int) or w < 1 for w in widths):
            raise ConfigError(f"All layer widths must be at least 1, got {widths}")

    @property
    def layer_shapes(self) -> List[Tuple[int, int]]:
        """(fan_out, fan_in) of each affine layer, input to output"""
        widths = [self.input_length, *self.hidden_layers, self.outputs]
        return [(widths[i + 1], widths[i]) for i in range(len(widths) - 1)]

    @property
    def parameter_count(self) -> int:
        return sum(out * inp + out for out, inp in self.layer_shapes)
