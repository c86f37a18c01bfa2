from .serialize import (decode_component, decode_formal_type, decode_matrix,
                        decode_module, decode_pair, decode_quad,
                        decode_rational, decode_series, dump_json, encode,
                        encode_component, encode_matrix, encode_module,
                        encode_operator, encode_series, encode_slopes,
                        load_json)

__all__ = [
    'encode',
    'encode_series',
    'encode_component',
    'encode_module',
    'encode_operator',
    'encode_matrix',
    'encode_slopes',
    'decode_rational',
    'decode_series',
    'decode_component',
    'decode_module',
    'decode_matrix',
    'decode_pair',
    'decode_quad',
    'decode_formal_type',
    'load_json',
    'dump_json',
]
