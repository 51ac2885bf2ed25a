"""Frozen canonical face template (generated by scripts/freeze_template.py).

Version 1: midpoint-identity frontal layout, face width 62% of the
80x80 canonical frame, centered at column 40 / row 41. Symmetric under
the iBUG left/right index swap by construction.
"""

CANONICAL_TEMPLATE_V1 = [
    [15.2, 41.0],
    [15.676525045999885, 46.926843982849974],
    [17.087787593720087, 52.62592267525143],
    [19.379553614896878, 57.878223679135516],
    [22.46375182657362, 62.481904012447316],
    [26.221858221113862, 66.26004682175133],
    [30.50945087734577, 69.0674601976929],
    [35.161760014000016, 70.79625681865014],
    [40.0, 71.38],
    [44.83823998599998, 70.79625681865014],
    [49.49054912265423, 69.0674601976929],
    [53.77814177888613, 66.26004682175133],
    [57.53624817342637, 62.481904012447316],
    [60.62044638510312, 57.878223679135516],
    [62.91221240627991, 52.62592267525143],
    [64.32347495400012, 46.92684398284999],
    [64.8, 41.00000000000001],
    [20.656, 26.037849999999995],
    [23.756, 25.753037499999998],
    [26.855999999999998, 25.658099999999997],
    [29.956, 25.753037499999998],
    [33.056, 26.037849999999995],
    [46.944, 26.037849999999995],
    [50.044, 25.753037499999998],
    [53.144000000000005, 25.658099999999997],
    [56.244, 25.753037499999998],
    [59.344, 26.037849999999995],
    [40.0, 34.0126],
    [40.0, 37.15186666666666],
    [40.0, 40.291133333333335],
    [40.0, 43.4304],
    [36.528, 45.1013],
    [38.264, 45.1013],
    [40.0, 45.1013],
    [41.736, 45.1013],
    [43.472, 45.1013],
    [23.383999999999997, 32.4936],
    [25.9136, 29.911299999999997],
    [29.2864, 29.911299999999997],
    [31.816000000000003, 32.4936],
    [29.2864, 35.0759],
    [25.9136, 35.0759],
    [48.184, 32.4936],
    [50.7136, 29.911299999999997],
    [54.0864, 29.911299999999997],
    [56.616, 32.4936],
    [54.0864, 35.0759],
    [50.7136, 35.0759],
    [31.567999999999998, 56.7976],
    [34.43488, 55.59734696],
    [37.217439999999996, 54.902586740000004],
    [40.0, 54.671],
    [42.782560000000004, 54.902586740000004],
    [45.56512, 55.59734696],
    [48.432, 56.7976],
    [45.56512, 58.409368368],
    [42.782560000000004, 59.342332092],
    [40.0, 59.65332000000001],
    [37.217439999999996, 59.342332092],
    [34.43488, 58.409368368],
    [33.2544, 56.7976],
    [36.6272, 56.227975],
    [40.0, 56.0381],
    [43.3728, 56.227975],
    [46.7456, 56.7976],
    [43.3728, 57.640645000000006],
    [40.0, 57.92166],
    [36.6272, 57.640645000000006],
]
