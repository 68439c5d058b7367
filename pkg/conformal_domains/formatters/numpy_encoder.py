# Python Standard Libraries
import json
# Third-Party Libraries
import numpy as np


class NumpyEncoder(json.JSONEncoder):
    """A JSON encoder that serializes numpy scalars and arrays as plain
    numbers and lists.
    """

    def default(self, obj):
        if isinstance(obj, np.ndarray):
            return obj.tolist()
        if isinstance(obj, np.integer):
            return int(obj)
        if isinstance(obj, np.floating):
            return float(obj)
        if isinstance(obj, np.bool_):
            return bool(obj)

        return json.JSONEncoder.default(self, obj)
