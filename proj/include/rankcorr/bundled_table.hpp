#pragma once

// Generated by tools/embed_table.py from data/parameter_table.json. Do not edit.

#include <string_view>

#include "table.hpp"

namespace rankcorr {

inline constexpr std::string_view kBundledTableJson = R"RANKCORR_TABLE({
  "entries": [
    {
      "coefficient": "spearman",
      "exact": {
        "10": {
          "gamma_bar": "-0.1156932",
          "left_variance": "0.0698778",
          "variance": "0.1536211"
        },
        "3": {
          "gamma_bar": "-0.0351391",
          "left_variance": "0.245896",
          "variance": "0.5181185"
        },
        "4": {
          "gamma_bar": "-0.055027",
          "left_variance": "0.1685735",
          "variance": "0.3670496"
        },
        "5": {
          "gamma_bar": "-0.0699207",
          "left_variance": "0.1322988",
          "variance": "0.2900554"
        },
        "6": {
          "gamma_bar": "-0.0820016",
          "left_variance": "0.1105955",
          "variance": "0.2426134"
        },
        "7": {
          "gamma_bar": "-0.0921957",
          "left_variance": "0.0957123",
          "variance": "0.2101364"
        },
        "8": {
          "gamma_bar": "-0.1010127",
          "left_variance": "0.0848307",
          "variance": "0.1863572"
        },
        "9": {
          "gamma_bar": "-0.1087727",
          "left_variance": "0.0764926",
          "variance": "0.1681119"
        }
      },
      "models": {
        "gamma": {
          "coefficients": [
            "-0.601437",
            "2.341654",
            "-3.801763",
            "2.248584"
          ],
          "n_max": "40000",
          "transform": "inverse_log"
        },
        "left_variance": {
          "coefficients": [
            "0.00208",
            "1.410178",
            "-29.80098",
            "441.8369",
            "-2221.862"
          ],
          "n_max": "inf",
          "transform": "inverse"
        },
        "variance": {
          "coefficients": [
            "0.004487",
            "2.988307",
            "-57.8245",
            "816.9964",
            "-3957.798"
          ],
          "n_max": "inf",
          "transform": "inverse"
        }
      },
      "scheme": "additive",
      "weight_function": {
        "kind": "harmonic",
        "n0": 0
      }
    },
    {
      "coefficient": "spearman",
      "exact": {
        "10": {
          "gamma_bar": "-0.3599846",
          "left_variance": "0.0714465",
          "variance": "0.1955189"
        },
        "3": {
          "gamma_bar": "-0.12458",
          "left_variance": "0.2255373",
          "variance": "0.5601135"
        },
        "4": {
          "gamma_bar": "-0.1860625",
          "left_variance": "0.160236",
          "variance": "0.4168125"
        },
        "5": {
          "gamma_bar": "-0.2311256",
          "left_variance": "0.1287807",
          "variance": "0.3414761"
        },
        "6": {
          "gamma_bar": "-0.2667351",
          "left_variance": "0.1092839",
          "variance": "0.2930327"
        },
        "7": {
          "gamma_bar": "-0.2959716",
          "left_variance": "0.0957021",
          "variance": "0.2586132"
        },
        "8": {
          "gamma_bar": "-0.3205778",
          "left_variance": "0.0856157",
          "variance": "0.2326099"
        },
        "9": {
          "gamma_bar": "-0.3416628",
          "left_variance": "0.0777563",
          "variance": "0.212133"
        }
      },
      "models": {
        "gamma": {
          "coefficients": [
            "-0.661424",
            "6.062951",
            "-55.79642",
            "261.0996"
          ],
          "n_max": "inf",
          "transform": "inverse"
        },
        "left_variance": {
          "coefficients": [
            "0.01059",
            "0.74149",
            "-2.920581",
            "16.77604"
          ],
          "n_max": "inf",
          "transform": "inverse"
        },
        "variance": {
          "coefficients": [
            "0.026646",
            "1.948141",
            "-2.76501"
          ],
          "n_max": "inf",
          "transform": "inverse"
        }
      },
      "scheme": "additive",
      "weight_function": {
        "kind": "inverse_quadratic",
        "n0": 0
      }
    },
    {
      "coefficient": "spearman",
      "exact": {
        "10": {
          "gamma_bar": "-0.2289015",
          "left_variance": "0.0692395",
          "variance": "0.1665609"
        },
        "3": {
          "gamma_bar": "-0.0542795",
          "left_variance": "0.2393852",
          "variance": "0.5216072"
        },
        "4": {
          "gamma_bar": "-0.0908478",
          "left_variance": "0.1641092",
          "variance": "0.3755816"
        },
        "5": {
          "gamma_bar": "-0.1214359",
          "left_variance": "0.1295744",
          "variance": "0.3011874"
        },
        "6": {
          "gamma_bar": "-0.1480683",
          "left_variance": "0.1086981",
          "variance": "0.2550984"
        },
        "7": {
          "gamma_bar": "-0.1716402",
          "left_variance": "0.0943793",
          "variance": "0.2232419"
        },
        "8": {
          "gamma_bar": "-0.1927137",
          "left_variance": "0.0838575",
          "variance": "0.1996417"
        },
        "9": {
          "gamma_bar": "-0.211696",
          "left_variance": "0.07573",
          "variance": "0.181306"
        }
      },
      "models": {
        "gamma": {
          "coefficients": [
            "-0.62854",
            "11.59787",
            "-214.1718",
            "2477.381",
            "-11180.82"
          ],
          "n_max": "inf",
          "transform": "inverse"
        },
        "left_variance": {
          "coefficients": [
            "0.00568",
            "0.727979",
            "-0.952968"
          ],
          "n_max": "inf",
          "transform": "inverse"
        },
        "variance": {
          "coefficients": [
            "0.012705",
            "1.973444",
            "-7.432244",
            "33.06051"
          ],
          "n_max": "inf",
          "transform": "inverse"
        }
      },
      "scheme": "additive",
      "weight_function": {
        "kind": "inverse_quadratic",
        "n0": 1
      }
    },
    {
      "coefficient": "spearman",
      "exact": {
        "10": {
          "gamma_bar": "-0.1625505",
          "left_variance": "0.0663905",
          "variance": "0.15037"
        },
        "3": {
          "gamma_bar": "-0.0302762",
          "left_variance": "0.2441574",
          "variance": "0.5113228"
        },
        "4": {
          "gamma_bar": "-0.0542042",
          "left_variance": "0.1647886",
          "variance": "0.3586697"
        },
        "5": {
          "gamma_bar": "-0.0758427",
          "left_variance": "0.1281768",
          "variance": "0.2824563"
        },
        "6": {
          "gamma_bar": "-0.0958261",
          "left_variance": "0.1065389",
          "variance": "0.2361664"
        },
        "7": {
          "gamma_bar": "-0.1143618",
          "left_variance": "0.0917853",
          "variance": "0.2047564"
        },
        "8": {
          "gamma_bar": "-0.1315846",
          "left_variance": "0.0810663",
          "variance": "0.1818611"
        },
        "9": {
          "gamma_bar": "-0.1476116",
          "left_variance": "0.0728762",
          "variance": "0.164317"
        }
      },
      "models": {
        "gamma": {
          "coefficients": [
            "-0.616849",
            "15.79627",
            "-330.0138",
            "3905.447",
            "-17614.87"
          ],
          "n_max": "inf",
          "transform": "inverse"
        },
        "left_variance": {
          "coefficients": [
            "0.003742",
            "0.728583",
            "-1.128635"
          ],
          "n_max": "inf",
          "transform": "inverse"
        },
        "variance": {
          "coefficients": [
            "0.008131",
            "1.883465",
            "-8.196073",
            "36.222"
          ],
          "n_max": "inf",
          "transform": "inverse"
        }
      },
      "scheme": "additive",
      "weight_function": {
        "kind": "inverse_quadratic",
        "n0": 2
      }
    },
    {
      "coefficient": "spearman",
      "errata": {
        "3": {
          "gamma_bar": "-0.0802795"
        },
        "4": {
          "gamma_bar": "-0.1009823"
        }
      },
      "exact": {
        "10": {
          "gamma_bar": "-0.1233591",
          "left_variance": "0.0775167",
          "variance": "0.1745125"
        },
        "3": {
          "gamma_bar": "-0.0351391",
          "left_variance": "0.2260603",
          "variance": "0.5333613"
        },
        "4": {
          "gamma_bar": "-0.0351391",
          "left_variance": "0.160053",
          "variance": "0.3820184"
        },
        "5": {
          "gamma_bar": "-0.1105363",
          "left_variance": "0.1312279",
          "variance": "0.3065119"
        },
        "6": {
          "gamma_bar": "-0.115858",
          "left_variance": "0.1130839",
          "variance": "0.2604369"
        },
        "7": {
          "gamma_bar": "-0.1190921",
          "left_variance": "0.1001576",
          "variance": "0.2290399"
        },
        "8": {
          "gamma_bar": "-0.1211498",
          "left_variance": "0.090589",
          "variance": "0.2060967"
        },
        "9": {
          "gamma_bar": "-0.1224877",
          "left_variance": "0.0832859",
          "variance": "0.1884992"
        }
      },
      "models": {
        "gamma": {
          "coefficients": [
            "-0.019307",
            "-0.595729",
            "0.837962"
          ],
          "n_max": "40000",
          "transform": "inverse_log"
        },
        "left_variance": {
          "coefficients": [
            "0.004903",
            "2.397079",
            "-68.24124",
            "1006.321",
            "-5002.647"
          ],
          "n_max": "inf",
          "transform": "inverse"
        },
        "variance": {
          "coefficients": [
            "0.012538",
            "3.697446",
            "-49.50208",
            "300.3544"
          ],
          "n_max": "inf",
          "transform": "inverse"
        }
      },
      "provenance": "gamma_bar at n=3,4 printed as a copy of the additive n=3 row; errata holds values recomputed by full enumeration",
      "scheme": "multiplicative",
      "weight_function": {
        "kind": "harmonic",
        "n0": 0
      }
    },
    {
      "coefficient": "spearman",
      "errata": {
        "3": {
          "gamma_bar": "-0.2174216"
        },
        "4": {
          "gamma_bar": "-0.2944276"
        }
      },
      "exact": {
        "10": {
          "gamma_bar": "-0.3990102",
          "left_variance": "0.0622902",
          "variance": "0.1900649"
        },
        "3": {
          "gamma_bar": "-0.12458",
          "left_variance": "0.2183891",
          "variance": "0.6345766"
        },
        "4": {
          "gamma_bar": "-0.12458",
          "left_variance": "0.1354465",
          "variance": "0.4515291"
        },
        "5": {
          "gamma_bar": "-0.3333887",
          "left_variance": "0.1077399",
          "variance": "0.3545254"
        },
        "6": {
          "gamma_bar": "-0.3571699",
          "left_variance": "0.092622",
          "variance": "0.2958008"
        },
        "7": {
          "gamma_bar": "-0.3731397",
          "left_variance": "0.0809675",
          "variance": "0.2564279"
        },
        "8": {
          "gamma_bar": "-0.3844621",
          "left_variance": "0.0725216",
          "variance": "0.2281286"
        },
        "9": {
          "gamma_bar": "-0.3927709",
          "left_variance": "0.0666184",
          "variance": "0.2067728"
        }
      },
      "models": {
        "gamma": {
          "coefficients": [
            "0.038146",
            "-0.080508",
            "-33.42217",
            "185.8295",
            "-388.7535",
            "292.1339"
          ],
          "n_max": "40000",
          "transform": "inverse_log"
        },
        "left_variance": {
          "coefficients": [
            "-0.013756",
            "0.304449",
            "-0.746029",
            "1.043273"
          ],
          "n_max": "40000",
          "transform": "inverse_log"
        },
        "variance": {
          "coefficients": [
            "-0.033754",
            "0.688005",
            "-2.742296",
            "8.618715",
            "-7.441726"
          ],
          "n_max": "40000",
          "transform": "inverse_log"
        }
      },
      "provenance": "gamma_bar at n=3,4 printed as a copy of the additive n=3 row; errata holds values recomputed by full enumeration",
      "scheme": "multiplicative",
      "weight_function": {
        "kind": "inverse_quadratic",
        "n0": 0
      }
    },
    {
      "coefficient": "spearman",
      "errata": {
        "3": {
          "gamma_bar": "-0.1182692"
        },
        "4": {
          "gamma_bar": "-0.1585284"
        }
      },
      "exact": {
        "10": {
          "gamma_bar": "-0.2322883",
          "left_variance": "0.0726842",
          "variance": "0.1794765"
        },
        "3": {
          "gamma_bar": "-0.0542795",
          "left_variance": "0.2123318",
          "variance": "0.549567"
        },
        "4": {
          "gamma_bar": "-0.0542795",
          "left_variance": "0.1491632",
          "variance": "0.3917036"
        },
        "5": {
          "gamma_bar": "-0.1816873",
          "left_variance": "0.1234245",
          "variance": "0.3137249"
        },
        "6": {
          "gamma_bar": "-0.1976062",
          "left_variance": "0.1058792",
          "variance": "0.2665942"
        },
        "7": {
          "gamma_bar": "-0.2094618",
          "left_variance": "0.0931088",
          "variance": "0.2346528"
        },
        "8": {
          "gamma_bar": "-0.218712",
          "left_variance": "0.0840994",
          "variance": "0.2113929"
        },
        "9": {
          "gamma_bar": "-0.2261579",
          "left_variance": "0.0775753",
          "variance": "0.1935963"
        }
      },
      "models": {
        "gamma": {
          "coefficients": [
            "0.090947",
            "-1.017228",
            "-23.15904",
            "159.0246",
            "-367.7098",
            "294.2084"
          ],
          "n_max": "40000",
          "transform": "inverse_log"
        },
        "left_variance": {
          "coefficients": [
            "-0.00869",
            "0.120127",
            "0.157677"
          ],
          "n_max": "40000",
          "transform": "inverse_log"
        },
        "variance": {
          "coefficients": [
            "0.010193",
            "-0.298537",
            "3.34995",
            "-6.157762",
            "4.85662"
          ],
          "n_max": "40000",
          "transform": "inverse_log"
        }
      },
      "provenance": "gamma_bar at n=3,4 printed as a copy of the additive n=3 row; errata holds values recomputed by full enumeration",
      "scheme": "multiplicative",
      "weight_function": {
        "kind": "inverse_quadratic",
        "n0": 1
      }
    },
    {
      "coefficient": "spearman",
      "errata": {
        "3": {
          "gamma_bar": "-0.0714818"
        },
        "4": {
          "gamma_bar": "-0.0976867"
        }
      },
      "exact": {
        "10": {
          "gamma_bar": "-0.1533393",
          "left_variance": "0.0736614",
          "variance": "0.1681206"
        },
        "3": {
          "gamma_bar": "-0.0302762",
          "left_variance": "0.2236318",
          "variance": "0.5222276"
        },
        "4": {
          "gamma_bar": "-0.0302762",
          "left_variance": "0.1553757",
          "variance": "0.3706945"
        },
        "5": {
          "gamma_bar": "-0.1138495",
          "left_variance": "0.1266716",
          "variance": "0.2957158"
        },
        "6": {
          "gamma_bar": "-0.125526",
          "left_variance": "0.1082567",
          "variance": "0.2505371"
        },
        "7": {
          "gamma_bar": "-0.1346007",
          "left_variance": "0.0952586",
          "variance": "0.2201062"
        },
        "8": {
          "gamma_bar": "-0.1419613",
          "left_variance": "0.0858235",
          "variance": "0.1980887"
        },
        "9": {
          "gamma_bar": "-0.1481048",
          "left_variance": "0.0789453",
          "variance": "0.1813411"
        }
      },
      "models": {
        "gamma": {
          "coefficients": [
            "0.306574",
            "-6.368495",
            "27.40441",
            "-48.33406",
            "30.79281"
          ],
          "n_max": "40000",
          "transform": "inverse_log"
        },
        "left_variance": {
          "coefficients": [
            "-0.005547",
            "0.041578",
            "0.52811",
            "-0.477712"
          ],
          "n_max": "40000",
          "transform": "inverse_log"
        },
        "variance": {
          "coefficients": [
            "0.018235",
            "-0.50893",
            "4.781896",
            "-10.18314",
            "8.548069"
          ],
          "n_max": "40000",
          "transform": "inverse_log"
        }
      },
      "provenance": "gamma_bar at n=3,4 printed as a copy of the additive n=3 row; errata holds values recomputed by full enumeration",
      "scheme": "multiplicative",
      "weight_function": {
        "kind": "inverse_quadratic",
        "n0": 2
      }
    },
    {
      "coefficient": "kendall",
      "exact": {
        "10": {
          "gamma_bar": "-0.1076337",
          "left_variance": "0.0441259",
          "variance": "0.1052991"
        },
        "3": {
          "gamma_bar": "-0.0428591",
          "left_variance": "0.2018534",
          "variance": "0.4643206"
        },
        "4": {
          "gamma_bar": "-0.0618355",
          "left_variance": "0.128829",
          "variance": "0.3005303"
        },
        "5": {
          "gamma_bar": "-0.0741663",
          "left_variance": "0.0952204",
          "variance": "0.2237503"
        },
        "6": {
          "gamma_bar": "-0.0834441",
          "left_variance": "0.0760413",
          "variance": "0.1796905"
        },
        "7": {
          "gamma_bar": "-0.0909502",
          "left_variance": "0.0637416",
          "variance": "0.1512146"
        },
        "8": {
          "gamma_bar": "-0.0972845",
          "left_variance": "0.0552042",
          "variance": "0.1313125"
        },
        "9": {
          "gamma_bar": "-0.1027778",
          "left_variance": "0.048932",
          "variance": "0.1166122"
        }
      },
      "models": {
        "gamma": {
          "coefficients": [
            "-0.452135",
            "1.49774",
            "-1.648071"
          ],
          "n_max": "3000",
          "transform": "inverse_log"
        },
        "left_variance": {
          "coefficients": [
            "0.002905",
            "0.573667",
            "-3.503062",
            "17.85528"
          ],
          "n_max": "inf",
          "transform": "inverse"
        },
        "variance": {
          "coefficients": [
            "0.005522",
            "1.761004",
            "-32.87796",
            "502.6566",
            "-2569.777"
          ],
          "n_max": "inf",
          "transform": "inverse"
        }
      },
      "scheme": "additive",
      "weight_function": {
        "kind": "harmonic",
        "n0": 0
      }
    },
    {
      "coefficient": "kendall",
      "exact": {
        "10": {
          "gamma_bar": "-0.3658366",
          "left_variance": "0.0500832",
          "variance": "0.189177"
        },
        "3": {
          "gamma_bar": "-0.1392512",
          "left_variance": "0.212235",
          "variance": "0.5865483"
        },
        "4": {
          "gamma_bar": "-0.2074294",
          "left_variance": "0.1330324",
          "variance": "0.4268329"
        },
        "5": {
          "gamma_bar": "-0.2522021",
          "left_variance": "0.0997918",
          "variance": "0.3422718"
        },
        "6": {
          "gamma_bar": "-0.2852926",
          "left_variance": "0.0815773",
          "variance": "0.2894809"
        },
        "7": {
          "gamma_bar": "-0.311327",
          "left_variance": "0.0697496",
          "variance": "0.2530892"
        },
        "8": {
          "gamma_bar": "-0.3326212",
          "left_variance": "0.0613258",
          "variance": "0.2263027"
        },
        "9": {
          "gamma_bar": "-0.3505098",
          "left_variance": "0.0549977",
          "variance": "0.2056522"
        }
      },
      "models": {
        "gamma": {
          "coefficients": [
            "-0.61982",
            "6.387459",
            "-119.0659",
            "1550.544",
            "-7595.937"
          ],
          "n_max": "inf",
          "transform": "inverse"
        },
        "left_variance": {
          "coefficients": [
            "0.010087",
            "0.399278"
          ],
          "n_max": "inf",
          "transform": "inverse"
        },
        "variance": {
          "coefficients": [
            "0.020643",
            "2.178677",
            "-5.440805"
          ],
          "n_max": "inf",
          "transform": "inverse"
        }
      },
      "scheme": "additive",
      "weight_function": {
        "kind": "inverse_quadratic",
        "n0": 0
      }
    },
    {
      "coefficient": "kendall",
      "exact": {
        "10": {
          "gamma_bar": "-0.213521",
          "left_variance": "0.0482469",
          "variance": "0.1346872"
        },
        "3": {
          "gamma_bar": "-0.0643976",
          "left_variance": "0.1988788",
          "variance": "0.4861446"
        },
        "4": {
          "gamma_bar": "-0.1003907",
          "left_variance": "0.1286455",
          "variance": "0.3277733"
        },
        "5": {
          "gamma_bar": "-0.1274014",
          "left_variance": "0.0973095",
          "variance": "0.2530008"
        },
        "6": {
          "gamma_bar": "-0.1496204",
          "left_variance": "0.0790937",
          "variance": "0.2096939"
        },
        "7": {
          "gamma_bar": "-0.168656",
          "left_variance": "0.0672671",
          "variance": "0.1813923"
        },
        "8": {
          "gamma_bar": "-0.1853389",
          "left_variance": "0.0590139",
          "variance": "0.1613661"
        },
        "9": {
          "gamma_bar": "-0.2001783",
          "left_variance": "0.0529286",
          "variance": "0.1463784"
        }
      },
      "models": {
        "gamma": {
          "coefficients": [
            "-0.544036",
            "11.26601",
            "-286.6257",
            "5118.082",
            "-47580.03",
            "171722.3"
          ],
          "n_max": "inf",
          "transform": "inverse"
        },
        "left_variance": {
          "coefficients": [
            "0.00762",
            "0.455188",
            "-0.628606"
          ],
          "n_max": "inf",
          "transform": "inverse"
        },
        "variance": {
          "coefficients": [
            "0.015561",
            "1.879833",
            "-13.76867",
            "68.77372"
          ],
          "n_max": "inf",
          "transform": "inverse"
        }
      },
      "scheme": "additive",
      "weight_function": {
        "kind": "inverse_quadratic",
        "n0": 1
      }
    },
    {
      "coefficient": "kendall",
      "exact": {
        "10": {
          "gamma_bar": "-0.1454849",
          "left_variance": "0.0443035",
          "variance": "0.1099161"
        },
        "3": {
          "gamma_bar": "-0.0366118",
          "left_variance": "0.1991994",
          "variance": "0.4512905"
        },
        "4": {
          "gamma_bar": "-0.0593039",
          "left_variance": "0.1264909",
          "variance": "0.2915696"
        },
        "5": {
          "gamma_bar": "-0.0778002",
          "left_variance": "0.0934387",
          "variance": "0.2187594"
        },
        "6": {
          "gamma_bar": "-0.0940042",
          "left_variance": "0.0747621",
          "variance": "0.1777569"
        },
        "7": {
          "gamma_bar": "-0.1085925",
          "left_variance": "0.0629253",
          "variance": "0.1515961"
        },
        "8": {
          "gamma_bar": "-0.1219045",
          "left_variance": "0.0547863",
          "variance": "0.1334668"
        },
        "9": {
          "gamma_bar": "-0.1341517",
          "left_variance": "0.0488417",
          "variance": "0.120144"
        }
      },
      "models": {
        "gamma": {
          "coefficients": [
            "-0.521584",
            "14.80992",
            "-334.0915",
            "3972.444",
            "-17689.92"
          ],
          "n_max": "inf",
          "transform": "inverse"
        },
        "left_variance": {
          "coefficients": [
            "0.005096",
            "0.463824",
            "-0.839183"
          ],
          "n_max": "inf",
          "transform": "inverse"
        },
        "variance": {
          "coefficients": [
            "0.010423",
            "1.803538",
            "-19.08445",
            "113.1593"
          ],
          "n_max": "inf",
          "transform": "inverse"
        }
      },
      "scheme": "additive",
      "weight_function": {
        "kind": "inverse_quadratic",
        "n0": 2
      }
    },
    {
      "coefficient": "kendall",
      "exact": {
        "10": {
          "gamma_bar": "-0.1326976",
          "left_variance": "0.0556269",
          "variance": "0.1701178"
        },
        "3": {
          "gamma_bar": "-0.0745921",
          "left_variance": "0.2068706",
          "variance": "0.5406241"
        },
        "4": {
          "gamma_bar": "-0.0992074",
          "left_variance": "0.1345549",
          "variance": "0.3799759"
        },
        "5": {
          "gamma_bar": "-0.1114205",
          "left_variance": "0.1052886",
          "variance": "0.3003558"
        },
        "6": {
          "gamma_bar": "-0.1188077",
          "left_variance": "0.087606",
          "variance": "0.2531364"
        },
        "7": {
          "gamma_bar": "-0.1238325",
          "left_variance": "0.0754118",
          "variance": "0.2219125"
        },
        "8": {
          "gamma_bar": "-0.1275243",
          "left_variance": "0.0668054",
          "variance": "0.1997066"
        },
        "9": {
          "gamma_bar": "-0.1303874",
          "left_variance": "0.0604781",
          "variance": "0.1830722"
        }
      },
      "models": {
        "gamma": {
          "coefficients": [
            "-0.235206",
            "0.434552",
            "-0.4637"
          ],
          "n_max": "3000",
          "transform": "inverse_log"
        },
        "left_variance": {
          "coefficients": [
            "0.009314",
            "0.852271",
            "-8.693876",
            "48.29288"
          ],
          "n_max": "inf",
          "transform": "inverse"
        },
        "variance": {
          "coefficients": [
            "0.036587",
            "2.836327",
            "-36.09014",
            "218.8208"
          ],
          "n_max": "inf",
          "transform": "inverse"
        }
      },
      "scheme": "multiplicative",
      "weight_function": {
        "kind": "harmonic",
        "n0": 0
      }
    },
    {
      "coefficient": "kendall",
      "exact": {
        "10": {
          "gamma_bar": "-0.406195",
          "left_variance": "0.0693738",
          "variance": "0.2951823"
        },
        "3": {
          "gamma_bar": "-0.185488",
          "left_variance": "0.2443723",
          "variance": "0.7021316"
        },
        "4": {
          "gamma_bar": "-0.26514",
          "left_variance": "0.1595142",
          "variance": "0.5494523"
        },
        "5": {
          "gamma_bar": "-0.3109147",
          "left_variance": "0.1236619",
          "variance": "0.4608244"
        },
        "6": {
          "gamma_bar": "-0.3414211",
          "left_variance": "0.1032788",
          "variance": "0.4037092"
        },
        "7": {
          "gamma_bar": "-0.363651",
          "left_variance": "0.0902007",
          "variance": "0.3640513"
        },
        "8": {
          "gamma_bar": "-0.3808363",
          "left_variance": "0.0811217",
          "variance": "0.3349671"
        },
        "9": {
          "gamma_bar": "-0.394686",
          "left_variance": "0.0744639",
          "variance": "0.3127349"
        }
      },
      "models": {
        "gamma": {
          "coefficients": [
            "-1.012771",
            "3.502608",
            "-8.290404",
            "8.039727"
          ],
          "n_max": "3000",
          "transform": "inverse_log"
        },
        "left_variance": {
          "coefficients": [
            "-0.011199",
            "0.307276",
            "-0.766444",
            "1.137351"
          ],
          "n_max": "3000",
          "transform": "inverse_log"
        },
        "variance": {
          "coefficients": [
            "0.025408",
            "0.583835"
          ],
          "n_max": "3000",
          "transform": "inverse_log"
        }
      },
      "scheme": "multiplicative",
      "weight_function": {
        "kind": "inverse_quadratic",
        "n0": 0
      }
    },
    {
      "coefficient": "kendall",
      "exact": {
        "10": {
          "gamma_bar": "-0.2378916",
          "left_variance": "0.0686167",
          "variance": "0.2414456"
        },
        "3": {
          "gamma_bar": "-0.1028431",
          "left_variance": "0.215398",
          "variance": "0.5839694"
        },
        "4": {
          "gamma_bar": "-0.1459207",
          "left_variance": "0.1437786",
          "variance": "0.4344145"
        },
        "5": {
          "gamma_bar": "-0.1722248",
          "left_variance": "0.1146279",
          "variance": "0.3601742"
        },
        "6": {
          "gamma_bar": "-0.1911483",
          "left_variance": "0.0974049",
          "variance": "0.316453"
        },
        "7": {
          "gamma_bar": "-0.2059938",
          "left_variance": "0.0862253",
          "variance": "0.2878464"
        },
        "8": {
          "gamma_bar": "-0.218257",
          "left_variance": "0.0785152",
          "variance": "0.2677464"
        },
        "9": {
          "gamma_bar": "-0.2287325",
          "left_variance": "0.0728941",
          "variance": "0.2528784"
        }
      },
      "models": {
        "gamma": {
          "coefficients": [
            "-0.889377",
            "2.860412",
            "-3.212251"
          ],
          "n_max": "3000",
          "transform": "inverse_log"
        },
        "left_variance": {
          "coefficients": [
            "0.011014",
            "0.121451"
          ],
          "n_max": "3000",
          "transform": "inverse_log"
        },
        "variance": {
          "coefficients": [
            "0.074257",
            "0.368796"
          ],
          "n_max": "3000",
          "transform": "inverse_log"
        }
      },
      "scheme": "multiplicative",
      "weight_function": {
        "kind": "inverse_quadratic",
        "n0": 1
      }
    },
    {
      "coefficient": "kendall",
      "exact": {
        "10": {
          "gamma_bar": "-0.1550424",
          "left_variance": "0.0629382",
          "variance": "0.1962291"
        },
        "3": {
          "gamma_bar": "-0.0637739",
          "left_variance": "0.202704",
          "variance": "0.5203415"
        },
        "4": {
          "gamma_bar": "-0.0905944",
          "left_variance": "0.1350048",
          "variance": "0.3692972"
        },
        "5": {
          "gamma_bar": "-0.1076588",
          "left_variance": "0.1073594",
          "variance": "0.2990175"
        },
        "6": {
          "gamma_bar": "-0.1204973",
          "left_variance": "0.0906875",
          "variance": "0.2594437"
        },
        "7": {
          "gamma_bar": "-0.1309927",
          "left_variance": "0.0797315",
          "variance": "0.2344817"
        },
        "8": {
          "gamma_bar": "-0.1399837",
          "left_variance": "0.0722813",
          "variance": "0.2175054"
        },
        "9": {
          "gamma_bar": "-0.1479128",
          "left_variance": "0.0669478",
          "variance": "0.2053251"
        }
      },
      "models": {
        "gamma": {
          "coefficients": [
            "-0.877253",
            "3.401867",
            "-4.108049"
          ],
          "n_max": "3000",
          "transform": "inverse_log"
        },
        "left_variance": {
          "coefficients": [
            "0.035322",
            "-0.038073",
            "0.223556"
          ],
          "n_max": "3000",
          "transform": "inverse_log"
        },
        "variance": {
          "coefficients": [
            "0.115488",
            "0.154672"
          ],
          "n_max": "3000",
          "transform": "inverse_log"
        }
      },
      "scheme": "multiplicative",
      "weight_function": {
        "kind": "inverse_quadratic",
        "n0": 2
      }
    }
  ],
  "format_version": 1
}
)RANKCORR_TABLE";

/// The published parameter table, parsed once.
inline const ParameterTable& bundled_table() {
  static const ParameterTable table = load_table(kBundledTableJson);
  return table;
}

}  // namespace rankcorr
