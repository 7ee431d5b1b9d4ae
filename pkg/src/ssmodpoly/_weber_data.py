"""Generated by tools/gen_weber_data.py; do not edit."""

P12 = {
    (0, 0): -4294967296,
    (0, 1): -8589934592,
    (0, 2): -7516192768,
    (0, 3): -3758096384,
    (0, 4): -1157627904,
    (0, 5): -218103808,
    (0, 6): -23068672,
    (0, 7): -1048576,
    (8, 0): -68719476736,
    (8, 1): -137438953472,
    (8, 2): -120259084288,
    (8, 3): -60129542144,
    (8, 4): -18522046464,
    (8, 5): -3489660928,
    (8, 6): -369098752,
    (8, 7): -16777216,
    (16, 8): 1048576,
}

P23 = {
    (0, 0, 7): 16,
    (1, 0, 6): 128,
    (2, 0, 5): 1024,
    (2, 0, 6): 256,
    (3, 0, 4): 8192,
    (3, 0, 5): 4096,
    (3, 0, 6): 512,
    (4, 0, 4): -16384,
    (4, 0, 5): -12288,
    (4, 0, 6): 1024,
    (4, 1, 5): -6144,
    (4, 2, 4): 4096,
    (4, 3, 3): -1024,
    (5, 0, 5): 32768,
    (5, 0, 6): 2048,
    (5, 1, 4): -49152,
    (5, 1, 6): 448,
    (5, 2, 3): 32768,
    (5, 3, 2): -8192,
    (6, 0, 4): 262144,
    (6, 0, 5): 81920,
    (6, 0, 6): 3072,
    (6, 1, 3): -393216,
    (6, 1, 4): -98304,
    (6, 1, 5): 3584,
    (6, 2, 2): 262144,
    (6, 2, 3): 65536,
    (6, 3, 1): -65536,
    (6, 3, 2): -16384,
    (7, 0, 3): 2097152,
    (7, 0, 4): 1179648,
    (7, 0, 5): 180224,
    (7, 0, 6): 5120,
    (7, 1, 2): -3145728,
    (7, 1, 3): -1572864,
    (7, 1, 4): -167936,
    (7, 1, 5): 7168,
    (7, 2, 1): 2097152,
    (7, 2, 2): 1048576,
    (7, 2, 3): 131072,
    (7, 3, 0): -524288,
    (7, 3, 1): -262144,
    (7, 3, 2): -32768,
    (8, 0, 3): -4194304,
    (8, 0, 4): -3342336,
    (8, 0, 5): -507904,
    (8, 0, 6): -57344,
    (8, 0, 7): 896,
    (8, 1, 2): 6291456,
    (8, 1, 3): 4816896,
    (8, 1, 4): 704512,
    (8, 1, 5): 153600,
    (8, 2, 1): -4194304,
    (8, 2, 2): -3145728,
    (8, 2, 3): -589824,
    (8, 2, 4): -163840,
    (8, 3, 0): 1048576,
    (8, 3, 1): 786432,
    (8, 3, 2): 196608,
    (8, 3, 3): 57344,
    (9, 0, 4): 3080192,
    (9, 0, 5): 229376,
    (9, 0, 6): 16384,
    (9, 1, 3): -4390912,
    (9, 1, 4): 180224,
    (9, 1, 5): 20480,
    (9, 1, 6): -6272,
    (9, 2, 2): 1572864,
    (9, 2, 3): -786432,
    (9, 2, 4): -114688,
    (9, 3, 2): 327680,
    (9, 3, 3): 69632,
    (9, 4, 2): -16384,
    (10, 0, 3): 25165824,
    (10, 0, 4): 8388608,
    (10, 0, 5): 401408,
    (10, 0, 6): 32768,
    (10, 1, 2): -33554432,
    (10, 1, 3): -5242880,
    (10, 1, 4): 1900544,
    (10, 1, 5): 7168,
    (10, 2, 1): 12582912,
    (10, 2, 2): -3145728,
    (10, 2, 3): -2752512,
    (10, 2, 5): 5376,
    (10, 3, 1): 2621440,
    (10, 3, 2): 1277952,
    (10, 4, 1): -131072,
    (11, 0, 2): 201326592,
    (11, 0, 3): 117440512,
    (11, 0, 4): 17694720,
    (11, 0, 5): 688128,
    (11, 0, 6): 57344,
    (11, 1, 1): -268435456,
    (11, 1, 2): -109051904,
    (11, 1, 3): 7864320,
    (11, 1, 4): 4251648,
    (11, 1, 5): -14336,
    (11, 2, 0): 100663296,
    (11, 2, 2): -30408704,
    (11, 2, 3): -5767168,
    (11, 2, 4): 43008,
    (11, 3, 0): 20971520,
    (11, 3, 1): 15990784,
    (11, 3, 2): 2621440,
    (11, 4, 0): -1048576,
    (11, 4, 1): -262144,
    (12, 0, 2): -402653184,
    (12, 0, 3): -318767104,
    (12, 0, 4): -64225280,
    (12, 0, 5): -7372800,
    (12, 0, 6): 98304,
    (12, 1, 1): 536870912,
    (12, 1, 2): 339738624,
    (12, 1, 3): 25362432,
    (12, 1, 4): -1343488,
    (12, 1, 5): -2170880,
    (12, 2, 0): -201326592,
    (12, 2, 1): -41943040,
    (12, 2, 2): 54525952,
    (12, 2, 3): 15450112,
    (12, 2, 4): 3608576,
    (12, 3, 0): -44040192,
    (12, 3, 1): -35651584,
    (12, 3, 2): -9306112,
    (12, 3, 3): -1671168,
    (13, 0, 3): 117440512,
    (13, 0, 4): -8388608,
    (13, 0, 5): 1441792,
    (13, 0, 6): 196608,
    (13, 1, 2): -100663296,
    (13, 1, 3): 44433408,
    (13, 1, 4): -6914048,
    (13, 1, 5): -1597440,
    (13, 1, 6): 68096,
    (13, 2, 2): -20578304,
    (13, 2, 3): 16711680,
    (13, 2, 4): 4366336,
    (13, 3, 1): -17825792,
    (13, 3, 2): -12648448,
    (13, 3, 3): -3760128,
    (13, 4, 0): 4194304,
    (13, 4, 1): 2097152,
    (13, 4, 2): 1146880,
    (14, 0, 2): 1073741824,
    (14, 0, 3): 268435456,
    (14, 0, 4): -12582912,
    (14, 0, 5): 5963776,
    (14, 0, 6): 262144,
    (14, 1, 1): -805306368,
    (14, 1, 2): 335544320,
    (14, 1, 3): 206831616,
    (14, 1, 4): -18350080,
    (14, 2, 1): -402653184,
    (14, 2, 2): -105644032,
    (14, 2, 3): 48693248,
    (14, 2, 4): 212992,
    (14, 2, 5): -150528,
    (14, 3, 1): -28311552,
    (14, 3, 2): -38076416,
    (14, 3, 3): -868352,
    (14, 4, 1): 7077888,
    (14, 4, 2): 458752,
    (14, 5, 1): -98304,
    (15, 0, 1): 8589934592,
    (15, 0, 2): 4294967296,
    (15, 0, 3): 184549376,
    (15, 0, 4): -17301504,
    (15, 0, 5): 12976128,
    (15, 0, 6): 393216,
    (15, 1, 0): -6442450944,
    (15, 1, 1): 1073741824,
    (15, 1, 2): 2675965952,
    (15, 1, 3): 275775488,
    (15, 1, 4): -47218688,
    (15, 1, 5): 401408,
    (15, 2, 0): -3221225472,
    (15, 2, 1): -1795162112,
    (15, 2, 2): 232783872,
    (15, 2, 3): 122683392,
    (15, 2, 4): -516096,
    (15, 3, 0): -213909504,
    (15, 3, 1): -383254528,
    (15, 3, 2): -90701824,
    (15, 3, 4): 35840,
    (15, 4, 0): 56623104,
    (15, 4, 1): 18874368,
    (15, 5, 0): -786432,
    (16, 0, 1): -17179869184,
    (16, 0, 2): -11274289152,
    (16, 0, 3): -1040187392,
    (16, 0, 4): 20971520,
    (16, 0, 5): 13762560,
    (16, 0, 6): -4128768,
    (16, 0, 7): 21504,
    (16, 1, 0): 12884901888,
    (16, 1, 1): -536870912,
    (16, 1, 2): -5964300288,
    (16, 1, 3): -1171783680,
    (16, 1, 4): -73662464,
    (16, 1, 5): 23584768,
    (16, 2, 0): 6979321856,
    (16, 2, 1): 4177526784,
    (16, 2, 2): -37748736,
    (16, 2, 3): -203751424,
    (16, 2, 4): -54788096,
    (16, 3, 0): 952107008,
    (16, 3, 1): 852492288,
    (16, 3, 2): 231473152,
    (16, 3, 3): 33742848,
    (16, 4, 1): 2097152,
    (16, 5, 0): -524288,
    (17, 0, 2): 536870912,
    (17, 0, 3): -1744830464,
    (17, 0, 4): 147849216,
    (17, 0, 5): 31195136,
    (17, 0, 6): 745472,
    (17, 1, 1): 1073741824,
    (17, 1, 2): 721420288,
    (17, 1, 3): -1272446976,
    (17, 1, 4): -93585408,
    (17, 1, 5): 21954560,
    (17, 1, 6): -530432,
    (17, 2, 0): -268435456,
    (17, 2, 1): 2415919104,
    (17, 2, 2): 1169686528,
    (17, 2, 3): -104071168,
    (17, 2, 4): -89866240,
    (17, 3, 0): -872415232,
    (17, 3, 1): 312475648,
    (17, 3, 2): 307036160,
    (17, 3, 3): 106151936,
    (17, 4, 0): -243269632,
    (17, 4, 1): -132120576,
    (17, 4, 2): -41156608,
    (17, 5, 0): 1048576,
    (18, 0, 1): 17179869184,
    (18, 0, 2): -4294967296,
    (18, 0, 3): -2617245696,
    (18, 0, 4): 675282944,
    (18, 0, 5): 31064064,
    (18, 0, 6): 1490944,
    (18, 1, 1): 19327352832,
    (18, 1, 2): 2717908992,
    (18, 1, 3): -3310878720,
    (18, 1, 4): 119799808,
    (18, 1, 5): 3153920,
    (18, 2, 1): 5133828096,
    (18, 2, 2): 3829399552,
    (18, 2, 3): -582483968,
    (18, 2, 4): -18546688,
    (18, 2, 5): 2386944,
    (18, 3, 1): -448266240,
    (18, 3, 2): 696778752,
    (18, 3, 3): 44990464,
    (18, 4, 1): -206569472,
    (18, 4, 2): -31195136,
    (18, 5, 0): 6291456,
    (18, 5, 1): 8257536,
    (19, 0, 0): 137438953472,
    (19, 0, 2): -42949672960,
    (19, 0, 3): -671088640,
    (19, 0, 4): 1657798656,
    (19, 0, 5): 37224448,
    (19, 0, 6): 2457600,
    (19, 1, 0): 154618822656,
    (19, 1, 1): 74088185856,
    (19, 1, 2): -25031606272,
    (19, 1, 3): -6492782592,
    (19, 1, 4): 446955520,
    (19, 1, 5): -114688,
    (19, 2, 0): 38654705664,
    (19, 2, 1): 45835354112,
    (19, 2, 2): 3746562048,
    (19, 2, 3): -1728577536,
    (19, 2, 4): 2924544,
    (19, 3, 0): -4194304000,
    (19, 3, 1): 4386193408,
    (19, 3, 2): 1930690560,
    (19, 3, 3): 1572864,
    (19, 3, 4): -1505280,
    (19, 4, 0): -1392508928,
    (19, 4, 1): -648019968,
    (19, 4, 2): -3407872,
    (19, 5, 0): 53477376,
    (19, 5, 1): 1441792,
    (19, 6, 0): -262144,
    (20, 0, 0): -274877906944,
    (20, 0, 2): 124554051584,
    (20, 0, 3): 15971909632,
    (20, 0, 4): -3009413120,
    (20, 0, 5): -745537536,
    (20, 0, 6): 3866624,
    (20, 1, 0): -352187318272,
    (20, 1, 1): -179314884608,
    (20, 1, 2): 47680847872,
    (20, 1, 3): 21007433728,
    (20, 1, 4): 1990197248,
    (20, 1, 5): -200048640,
    (20, 2, 0): -127238406144,
    (20, 2, 1): -105226698752,
    (20, 2, 2): -14864613376,
    (20, 2, 3): 1492975616,
    (20, 2, 4): 648167424,
    (20, 3, 0): -13304332288,
    (20, 3, 1): -14231273472,
    (20, 3, 2): -4011851776,
    (20, 3, 3): -522190848,
    (20, 4, 0): 100663296,
    (20, 4, 1): -113246208,
    (20, 4, 3): 143360,
    (20, 5, 0): 36700160,
    (21, 0, 1): -68719476736,
    (21, 0, 2): -42949672960,
    (21, 0, 3): 22145925120,
    (21, 0, 4): 1598029824,
    (21, 0, 5): -95420416,
    (21, 0, 6): 7733248,
    (21, 1, 0): 34359738368,
    (21, 1, 1): -105226698752,
    (21, 1, 2): -50667192320,
    (21, 1, 3): 12116819968,
    (21, 1, 4): 2577661952,
    (21, 1, 5): -253165568,
    (21, 1, 6): 3354624,
    (21, 2, 0): 72477573120,
    (21, 2, 1): -49928994816,
    (21, 2, 2): -34339291136,
    (21, 2, 3): -2698772480,
    (21, 2, 4): 1307738112,
    (21, 3, 0): 43620761600,
    (21, 3, 1): 7042236416,
    (21, 3, 2): -4475584512,
    (21, 3, 3): -2060124160,
    (21, 4, 0): 7063207936,
    (21, 4, 1): 4286578688,
    (21, 4, 2): 1005649920,
    (21, 5, 0): -75497472,
    (22, 0, 1): -274877906944,
    (22, 0, 2): -17179869184,
    (22, 0, 3): 53150220288,
    (22, 0, 4): -805306368,
    (22, 0, 5): 120061952,
    (22, 0, 6): 9502720,
    (22, 1, 1): -227633266688,
    (22, 1, 2): -133882183680,
    (22, 1, 3): 33552334848,
    (22, 1, 4): 13631488,
    (22, 1, 5): -32342016,
    (22, 2, 0): 1073741824,
    (22, 2, 1): -5771362304,
    (22, 2, 2): -68785537024,
    (22, 2, 3): 3576954880,
    (22, 2, 4): 448593920,
    (22, 2, 5): -27181056,
    (22, 3, 0): -1073741824,
    (22, 3, 1): 24874319872,
    (22, 3, 2): -7749500928,
    (22, 3, 3): -1220345856,
    (22, 4, 0): -1476395008,
    (22, 4, 1): 3869245440,
    (22, 4, 2): 1088880640,
    (22, 5, 0): -465567744,
    (22, 5, 1): -352714752,
    (23, 0, 0): -2199023255552,
    (23, 0, 1): -1030792151040,
    (23, 0, 2): 476741369856,
    (23, 0, 3): 103481868288,
    (23, 0, 4): -5460983808,
    (23, 0, 5): 367001600,
    (23, 0, 6): 13041664,
    (23, 1, 0): -1632087572480,
    (23, 1, 1): -1758789107712,
    (23, 1, 2): 19209912320,
    (23, 1, 3): 86557851648,
    (23, 1, 4): -2930769920,
    (23, 1, 5): -1835008,
    (23, 2, 0): 6442450944,
    (23, 2, 1): -597101117440,
    (23, 2, 2): -135027228672,
    (23, 2, 3): 18051235840,
    (23, 2, 4): 28901376,
    (23, 3, 0): 171421204480,
    (23, 3, 1): -838860800,
    (23, 3, 2): -29340205056,
    (23, 3, 3): -131072000,
    (23, 3, 4): 33402880,
    (23, 4, 0): 18714984448,
    (23, 4, 1): 14332461056,
    (23, 4, 2): 224264192,
    (23, 5, 0): -1796210688,
    (23, 5, 1): -118226944,
    (23, 6, 0): 25690112,
    (24, 0, 0): 5497558138880,
    (24, 0, 1): 2886218022912,
    (24, 0, 2): -1159641169920,
    (24, 0, 3): -444260679680,
    (24, 0, 4): -18396217344,
    (24, 0, 5): 3323985920,
    (24, 0, 6): -128450560,
    (24, 0, 7): 286720,
    (24, 1, 0): 5274219839488,
    (24, 1, 1): 4492535791616,
    (24, 1, 2): 208775675904,
    (24, 1, 3): -221190815744,
    (24, 1, 4): -26474446848,
    (24, 1, 5): 1455882240,
    (24, 2, 0): 1481763717120,
    (24, 2, 1): 1656917852160,
    (24, 2, 2): 355232382976,
    (24, 2, 3): -540016640,
    (24, 2, 4): -6311051264,
    (24, 3, 0): 117474066432,
    (24, 3, 1): 183773429760,
    (24, 3, 2): 54089744384,
    (24, 3, 3): 6576177152,
    (24, 4, 0): -6069157888,
    (24, 4, 1): 3185573888,
    (24, 4, 2): -8650752,
    (24, 4, 3): -8028160,
    (24, 5, 0): -1321205760,
    (25, 0, 0): -1099511627776,
    (25, 0, 1): 1099511627776,
    (25, 0, 2): 996432412672,
    (25, 0, 3): -134217728000,
    (25, 0, 4): -23731372032,
    (25, 0, 5): 1958739968,
    (25, 0, 6): 17432576,
    (25, 1, 0): -2714419331072,
    (25, 1, 1): 1511828488192,
    (25, 1, 2): 1208295096320,
    (25, 1, 3): -37964742656,
    (25, 1, 4): -41955360768,
    (25, 1, 5): 2071724032,
    (25, 1, 6): -18866176,
    (25, 2, 0): -2836825899008,
    (25, 2, 1): 73014444032,
    (25, 2, 2): 604871065600,
    (25, 2, 3): 92364603392,
    (25, 2, 4): -14837481472,
    (25, 3, 0): -1129307963392,
    (25, 3, 1): -421745655808,
    (25, 3, 2): 32567984128,
    (25, 3, 3): 30698635264,
    (25, 4, 0): -134091898880,
    (25, 4, 1): -95049220096,
    (25, 4, 2): -18731499520,
    (25, 5, 0): 2793406464,
    (25, 5, 2): 344064,
    (26, 0, 1): 2886218022912,
    (26, 0, 2): 1477468749824,
    (26, 0, 3): -377420251136,
    (26, 0, 4): 7449083904,
    (26, 0, 5): 1462763520,
    (26, 0, 6): 34865152,
    (26, 1, 0): -68719476736,
    (26, 1, 1): 712964571136,
    (26, 1, 2): 2204391964672,
    (26, 1, 3): -203618779136,
    (26, 1, 4): -10238296064,
    (26, 1, 5): 310116352,
    (26, 2, 0): 124554051584,
    (26, 2, 1): -1170244370432,
    (26, 2, 2): 790668247040,
    (26, 2, 3): 20331364352,
    (26, 2, 4): -6951534592,
    (26, 2, 5): 242049024,
    (26, 3, 0): 184683593728,
    (26, 3, 1): -557081165824,
    (26, 3, 2): 21131427840,
    (26, 3, 3): 22852403200,
    (26, 4, 0): 97173635072,
    (26, 4, 1): -42544922624,
    (26, 4, 2): -25871646720,
    (26, 5, 0): 17691574272,
    (26, 5, 1): 10188226560,
    (27, 0, 0): 19791209299968,
    (27, 0, 1): 21990232555520,
    (27, 0, 2): -897648164864,
    (27, 0, 3): -971736350720,
    (27, 0, 4): 59961769984,
    (27, 0, 5): 1203765248,
    (27, 0, 6): 55574528,
    (27, 1, 0): 3710851743744,
    (27, 1, 1): 21438329257984,
    (27, 1, 2): 2990169653248,
    (27, 1, 3): -814445756416,
    (27, 1, 4): 13959692288,
    (27, 1, 5): 78905344,
    (27, 2, 0): -7598870888448,
    (27, 2, 1): 4018478776320,
    (27, 2, 2): 2185807003648,
    (27, 2, 3): -141806272512,
    (27, 2, 4): -919339008,
    (27, 3, 0): -2831524298752,
    (27, 3, 1): -929222885376,
    (27, 3, 2): 334054293504,
    (27, 3, 3): 4202692608,
    (27, 3, 4): -514662400,
    (27, 4, 0): -87426072576,
    (27, 4, 1): -224635387904,
    (27, 4, 2): -7591952384,
    (27, 5, 0): 37937479680,
    (27, 5, 1): 4932239360,
    (27, 6, 0): -1274019840,
    (28, 0, 0): -65970697666560,
    (28, 0, 1): -64871186038784,
    (28, 0, 2): -850403524608,
    (28, 0, 3): 4070555254784,
    (28, 0, 4): 205151797248,
    (28, 0, 5): -34288435200,
    (28, 0, 6): 82837504,
    (28, 1, 0): -49134425866240,
    (28, 1, 1): -64080912056320,
    (28, 1, 2): -10809996476416,
    (28, 1, 3): 1683939655680,
    (28, 1, 4): 270033485824,
    (28, 1, 5): -8875409408,
    (28, 2, 0): -10612864188416,
    (28, 2, 1): -19073010237440,
    (28, 2, 2): -5276962914304,
    (28, 2, 3): -158684676096,
    (28, 2, 4): 52392099840,
    (28, 3, 0): -297594257408,
    (28, 3, 1): -1926838091776,
    (28, 3, 2): -599301029888,
    (28, 3, 3): -70065389568,
    (28, 4, 0): 190748557312,
    (28, 4, 1): -62281220096,
    (28, 4, 2): 411041792,
    (28, 4, 3): 231669760,
    (28, 5, 0): 32499564544,
    (28, 5, 1): -3670016,
    (29, 0, 0): 35184372088832,
    (29, 0, 1): -4947802324992,
    (29, 0, 2): -14671608283136,
    (29, 0, 3): 65498251264,
    (29, 0, 4): 324337139712,
    (29, 0, 5): -9143582720,
    (29, 0, 6): 165675008,
    (29, 1, 0): 76003741270016,
    (29, 1, 1): -919123001344,
    (29, 1, 2): -18740754251776,
    (29, 1, 3): -1225596600320,
    (29, 1, 4): 463512535040,
    (29, 1, 5): -14771290112,
    (29, 1, 6): 82345984,
    (29, 2, 0): 62274878308352,
    (29, 2, 1): 16207059091456,
    (29, 2, 2): -7214509064192,
    (29, 2, 3): -1601402044416,
    (29, 2, 4): 138793713664,
    (29, 3, 0): 19729469145088,
    (29, 3, 1): 10442474782720,
    (29, 3, 2): 183705796608,
    (29, 3, 3): -372611874816,
    (29, 4, 0): 1807879241728,
    (29, 4, 1): 1613389365248,
    (29, 4, 2): 282608009216,
    (29, 5, 0): -70527221760,
    (29, 5, 1): -20971520,
    (29, 5, 2): -24084480,
    (30, 0, 1): -9895604649984,
    (30, 0, 2): -20272245637120,
    (30, 0, 3): 2168958484480,
    (30, 0, 4): 144149839872,
    (30, 0, 5): -2793406464,
    (30, 0, 6): 191889408,
    (30, 1, 0): -5085241278464,
    (30, 1, 1): 25370371817472,
    (30, 1, 2): -22593407025152,
    (30, 1, 3): 12968787968,
    (30, 1, 4): 152001576960,
    (30, 1, 5): -2462580736,
    (30, 2, 0): -11497627451392,
    (30, 2, 1): 27873800880128,
    (30, 2, 2): -5175829856256,
    (30, 2, 3): -916257243136,
    (30, 2, 4): 80108060672,
    (30, 2, 5): -1790509056,
    (30, 3, 0): -8980776615936,
    (30, 3, 1): 8048642883584,
    (30, 3, 2): 1187150561280,
    (30, 3, 3): -329103704064,
    (30, 4, 0): -3320546590720,
    (30, 4, 1): 3745513472,
    (30, 4, 2): 468502446080,
    (30, 5, 0): -458152214528,
    (30, 5, 1): -223249170432,
    (30, 6, 1): 458752,
    (31, 0, 0): -43980465111040,
    (31, 0, 1): -230897441832960,
    (31, 0, 2): -21852793602048,
    (31, 0, 3): 8651137875968,
    (31, 0, 4): -153612189696,
    (31, 0, 5): 3036676096,
    (31, 0, 6): 244318208,
    (31, 1, 0): 153897268150272,
    (31, 1, 1): -156396939116544,
    (31, 1, 2): -51642149896192,
    (31, 1, 3): 5713397022720,
    (31, 1, 4): -32560381952,
    (31, 1, 5): -1093664768,
    (31, 2, 0): 137181255434240,
    (31, 2, 1): 7262923915264,
    (31, 2, 2): -24131265363968,
    (31, 2, 3): 764709699584,
    (31, 2, 4): 12815695872,
    (31, 3, 0): 26753015742464,
    (31, 3, 1): 19407371763712,
    (31, 3, 2): -2763668848640,
    (31, 3, 3): -84812496896,
    (31, 3, 4): 6107136000,
    (31, 4, 0): -1882772733952,
    (31, 4, 1): 2477913014272,
    (31, 4, 2): 175220719616,
    (31, 5, 0): -506567065600,
    (31, 5, 1): -139168055296,
    (31, 6, 0): 42555408384,
    (32, 0, 0): 457396837154816,
    (32, 0, 1): 793847395254272,
    (32, 0, 2): 122286308851712,
    (32, 0, 3): -32291711614976,
    (32, 0, 4): -2812264054784,
    (32, 0, 5): 154937589760,
    (32, 0, 6): -2260729856,
    (32, 0, 7): 2293760,
    (32, 1, 0): 242029997064192,
    (32, 1, 1): 651555128737792,
    (32, 1, 2): 173222876151808,
    (32, 1, 3): -8375806984192,
    (32, 1, 4): -2192647913472,
    (32, 1, 5): 49700405248,
    (32, 2, 0): 17308718202880,
    (32, 2, 1): 168127769870336,
    (32, 2, 2): 59698736791552,
    (32, 2, 3): 2727388119040,
    (32, 2, 4): -379464974336,
    (32, 3, 0): -10942570037248,
    (32, 3, 1): 16858199621632,
    (32, 3, 2): 5612540788736,
    (32, 3, 3): 648898674688,
    (32, 4, 0): -4143318040576,
    (32, 4, 1): 958994055168,
    (32, 4, 2): -10332667904,
    (32, 4, 3): -4564582400,
    (32, 5, 0): -613970608128,
    (32, 5, 1): 249561088,
    (32, 6, 0): -5242880,
    (33, 0, 0): -650910883643392,
    (33, 0, 1): -149533581377536,
    (33, 0, 2): 156852205649920,
    (33, 0, 3): 12429635354624,
    (33, 0, 4): -2855347945472,
    (33, 0, 5): 69155684352,
    (33, 0, 6): 238551040,
    (33, 1, 0): -1344290403909632,
    (33, 1, 1): -369538986147840,
    (33, 1, 2): 205042812452864,
    (33, 1, 3): 27208735260672,
    (33, 1, 4): -4125165092864,
    (33, 1, 5): 86511714304,
    (33, 1, 6): -372506624,
    (33, 2, 0): -953156322197504,
    (33, 2, 1): -437412488544256,
    (33, 2, 2): 59018202578944,
    (33, 2, 3): 20240603807744,
    (33, 2, 4): -1102604926976,
    (33, 3, 0): -255001872039936,
    (33, 3, 1): -178201783435264,
    (33, 3, 2): -9736835563520,
    (33, 3, 3): 3819375689728,
    (33, 4, 0): -17045416574976,
    (33, 4, 1): -22263827005440,
    (33, 4, 2): -3586333343744,
    (33, 5, 0): 1360741269504,
    (33, 5, 1): 1319108608,
    (33, 5, 2): 858783744,
    (33, 6, 0): -12582912,
    (34, 0, 0): 70368744177664,
    (34, 0, 1): -175921860444160,
    (34, 0, 2): 183343563931648,
    (34, 0, 3): 493921239040,
    (34, 0, 4): -1627255734272,
    (34, 0, 5): 47668264960,
    (34, 0, 6): 477102080,
    (34, 1, 0): 315010081357824,
    (34, 1, 1): -588101281906688,
    (34, 1, 2): 137350638206976,
    (34, 1, 3): 17754371391488,
    (34, 1, 4): -1570850734080,
    (34, 1, 5): 13733199872,
    (34, 2, 0): 416525928366080,
    (34, 2, 1): -390940271312896,
    (34, 2, 2): -11174900924416,
    (34, 2, 3): 14985075884032,
    (34, 2, 4): -745294266368,
    (34, 2, 5): 11230248960,
    (34, 3, 0): 256274256101376,
    (34, 3, 1): -74863746220032,
    (34, 3, 2): -31609468223488,
    (34, 3, 3): 3862456958976,
    (34, 4, 0): 77977815613440,
    (34, 4, 1): 11376990879744,
    (34, 4, 2): -6870259990528,
    (34, 5, 0): 9059763748864,
    (34, 5, 1): 3948110938112,
    (34, 6, 0): -29360128,
    (34, 6, 1): -38535168,
    (35, 0, 0): -1231453023109120,
    (35, 0, 1): 1583296743997440,
    (35, 0, 2): 387096812453888,
    (35, 0, 3): -51118700756992,
    (35, 0, 4): 286185750528,
    (35, 0, 5): 30014439424,
    (35, 0, 6): 744488960,
    (35, 1, 0): -2808427575246848,
    (35, 1, 1): 423406465974272,
    (35, 1, 2): 531023850897408,
    (35, 1, 3): -28752490790912,
    (35, 1, 4): -349989502976,
    (35, 1, 5): 4888461312,
    (35, 2, 0): -1386690321055744,
    (35, 2, 1): -544682920640512,
    (35, 2, 2): 192521187622912,
    (35, 2, 3): -1181258612736,
    (35, 2, 4): -134388645888,
    (35, 3, 0): -105056779108352,
    (35, 3, 1): -236882998853632,
    (35, 3, 2): 12738705227776,
    (35, 3, 3): 1260335923200,
    (35, 3, 4): -59091845120,
    (35, 4, 0): 46830377238528,
    (35, 4, 1): -15216976855040,
    (35, 4, 2): -3084275154944,
    (35, 5, 0): 2519518412800,
    (35, 5, 1): 2978673065984,
    (35, 6, 0): -1074995920896,
    (35, 7, 0): 262144,
    (36, 0, 0): -844424930131968,
    (36, 0, 1): -6957709580566528,
    (36, 0, 2): -1913012793376768,
    (36, 0, 3): 180981331918848,
    (36, 0, 4): 22166795976704,
    (36, 0, 5): -900382851072,
    (36, 0, 6): 1069547520,
    (36, 1, 0): 764847776071680,
    (36, 1, 1): -4921426930827264,
    (36, 1, 2): -1913460006846464,
    (36, 1, 3): 13451183259648,
    (36, 1, 4): 15550533074944,
    (36, 1, 5): -229101273088,
    (36, 2, 0): 720334735015936,
    (36, 2, 1): -1126419195232256,
    (36, 2, 2): -552552273805312,
    (36, 2, 3): -31045126717440,
    (36, 2, 4): 2434887843840,
    (36, 3, 0): 252081965367296,
    (36, 3, 1): -126343308115968,
    (36, 3, 2): -44760697929728,
    (36, 3, 3): -5330370560000,
    (36, 4, 0): 69886936088576,
    (36, 4, 1): -12589530611712,
    (36, 4, 2): 179782549504,
    (36, 4, 3): 68594892800,
    (36, 5, 0): 9518301839360,
    (36, 5, 1): -8367636480,
    (36, 6, 0): 367001600,
    (37, 0, 0): 8514618045497344,
    (37, 0, 1): 4134163720437760,
    (37, 0, 2): -1268286662639616,
    (37, 0, 3): -197439646597120,
    (37, 0, 4): 21595632435200,
    (37, 0, 5): -317827579904,
    (37, 0, 6): 2139095040,
    (37, 1, 0): 17308512044449792,
    (37, 1, 1): 8562438211371008,
    (37, 1, 2): -1646497187758080,
    (37, 1, 3): -349706068688896,
    (37, 1, 4): 30626774253568,
    (37, 1, 5): -454184402944,
    (37, 1, 6): 1165230080,
    (37, 2, 0): 11013498737786880,
    (37, 2, 1): 7214320991600640,
    (37, 2, 2): -262279165640704,
    (37, 2, 3): -205753830866944,
    (37, 2, 4): 7620660297728,
    (37, 3, 0): 2498180612620288,
    (37, 3, 1): 2379567641657344,
    (37, 3, 2): 175718960988160,
    (37, 3, 3): -33862930399232,
    (37, 4, 0): 86082620227584,
    (37, 4, 1): 259075195535360,
    (37, 4, 2): 39265531592704,
    (37, 5, 0): -21301880160256,
    (37, 5, 1): -42412802048,
    (37, 5, 2): -20726415360,
    (37, 6, 0): 905969664,
    (38, 0, 0): -2814749767106560,
    (38, 0, 1): 3984630139060224,
    (38, 0, 2): -967570232442880,
    (38, 0, 3): -151973122801664,
    (38, 0, 4): 15110768689152,
    (38, 0, 5): -202668769280,
    (38, 0, 6): 2369781760,
    (38, 1, 0): -8875807615221760,
    (38, 1, 1): 7414694100860928,
    (38, 1, 2): 39656506785792,
    (38, 1, 3): -281200233021440,
    (38, 1, 4): 12335414509568,
    (38, 1, 5): -89152028672,
    (38, 2, 0): -9701059811344384,
    (38, 2, 1): 3703466547478528,
    (38, 2, 2): 882278171410432,
    (38, 2, 3): -175167506481152,
    (38, 2, 4): 5812189659136,
    (38, 2, 5): -61259907072,
    (38, 3, 0): -5240066259550208,
    (38, 3, 1): 232392509882368,
    (38, 3, 2): 508300755992576,
    (38, 3, 3): -38265480544256,
    (38, 4, 0): -1407429644386304,
    (38, 4, 1): -296070735200256,
    (38, 4, 2): 84697281462272,
    (38, 5, 0): -145394105319424,
    (38, 5, 1): -58559591088128,
    (38, 6, 0): 2172649472,
    (38, 6, 1): 1638662144,
    (39, 0, 0): 20406935811522560,
    (39, 0, 1): -5858197952790528,
    (39, 0, 2): -3587981319340032,
    (39, 0, 3): 194682277593088,
    (39, 0, 4): 4450122989568,
    (39, 0, 5): -107978162176,
    (39, 0, 6): 2831155200,
    (39, 1, 0): 27385810990923776,
    (39, 1, 1): 5317444390354944,
    (39, 1, 2): -3793802594615296,
    (39, 1, 3): 49348234706944,
    (39, 1, 4): 4591303262208,
    (39, 1, 5): -53758394368,
    (39, 2, 0): 8385597227925504,
    (39, 2, 1): 7233249449345024,
    (39, 2, 2): -978978672214016,
    (39, 2, 3): -33415214661632,
    (39, 2, 4): 1119854002176,
    (39, 3, 0): -808554168582144,
    (39, 3, 1): 1774885739167744,
    (39, 3, 2): 63242672013312,
    (39, 3, 3): -14914907275264,
    (39, 3, 4): 482276802560,
    (39, 4, 0): -412746357145600,
    (39, 4, 1): -80006214582272,
    (39, 4, 2): 43968687505408,
    (39, 5, 0): 73668654792704,
    (39, 5, 1): -51441884463104,
    (39, 6, 0): 21864185331712,
    (39, 7, 0): -25690112,
    (40, 0, 0): -24206847997116416,
    (40, 0, 1): 44508230692372480,
    (40, 0, 2): 19688954718584832,
    (40, 0, 3): -685064463581184,
    (40, 0, 4): -150079847530496,
    (40, 0, 5): 3785275473920,
    (40, 0, 6): -24662507520,
    (40, 0, 7): 11010048,
    (40, 1, 0): -29598578141822976,
    (40, 1, 1): 26287922860785664,
    (40, 1, 2): 16805030208208896,
    (40, 1, 3): 291678476828672,
    (40, 1, 4): -93885904715776,
    (40, 1, 5): 1065604874240,
    (40, 2, 0): -12202809541787648,
    (40, 2, 1): 5163127289151488,
    (40, 2, 2): 4293973950595072,
    (40, 2, 3): 281949235052544,
    (40, 2, 4): -14017053589504,
    (40, 3, 0): -3542060602753024,
    (40, 3, 1): 869016973344768,
    (40, 3, 2): 298774333227008,
    (40, 3, 3): 39416378687488,
    (40, 4, 0): -980266961076224,
    (40, 4, 1): 149556515831808,
    (40, 4, 2): -2411322146816,
    (40, 4, 3): -834194636800,
    (40, 5, 0): -126717121265664,
    (40, 5, 1): 186717831168,
    (40, 6, 0): -13128171520,
    (41, 0, 0): -84723967989907456,
    (41, 0, 1): -62909657294831616,
    (41, 0, 2): 7524507824685056,
    (41, 0, 3): 2066600823881728,
    (41, 0, 4): -138779251703808,
    (41, 0, 5): 1482166370304,
    (41, 0, 6): 1996488704,
    (41, 1, 0): -171269276991225856,
    (41, 1, 1): -124614919860518912,
    (41, 1, 2): 9128837023531008,
    (41, 1, 3): 3428795470053376,
    (41, 1, 4): -196068646060032,
    (41, 1, 5): 2045998268416,
    (41, 1, 6): -4495769600,
    (41, 2, 0): -98156581287362560,
    (41, 2, 1): -90496118420406272,
    (41, 2, 2): -1071734597877760,
    (41, 2, 3): 1766638663761920,
    (41, 2, 4): -46352746676224,
    (41, 3, 0): -17684905798402048,
    (41, 3, 1): -26345103236792320,
    (41, 3, 2): -2252321937424384,
    (41, 3, 3): 264089951535104,
    (41, 4, 0): 511511143383040,
    (41, 4, 1): -2603862544351232,
    (41, 4, 2): -377689525452800,
    (41, 5, 0): 280517031231488,
    (41, 5, 1): 926211375104,
    (41, 5, 2): 379345698816,
    (41, 6, 0): -33319550976,
    (42, 0, 0): 64176294690029568,
    (42, 0, 1): -45915605575925760,
    (42, 0, 2): -842225906876416,
    (42, 0, 3): 2085223802077184,
    (42, 0, 4): -110380659507200,
    (42, 0, 5): 1034181148672,
    (42, 0, 6): 3992977408,
    (42, 1, 0): 170588129537818624,
    (42, 1, 1): -62588221942398976,
    (42, 1, 2): -13923686973177856,
    (42, 1, 3): 2940588953436160,
    (42, 1, 4): -85408377470976,
    (42, 1, 5): 336144105472,
    (42, 2, 0): 169098531800350720,
    (42, 2, 1): -19712615693418496,
    (42, 2, 2): -15118212471455744,
    (42, 2, 3): 1655415737679872,
    (42, 2, 4): -39069706878976,
    (42, 2, 5): 293307678720,
    (42, 3, 0): 84118738378424320,
    (42, 3, 1): 6755833601851392,
    (42, 3, 2): -6308554382245888,
    (42, 3, 3): 327655824031744,
    (42, 4, 0): 20722925145423872,
    (42, 4, 1): 5052953626935296,
    (42, 4, 2): -900143024963584,
    (42, 5, 0): 1966115232153600,
    (42, 5, 1): 747663079243776,
    (42, 6, 0): -82090917888,
    (42, 6, 1): -46932164608,
    (43, 0, 0): -181832834955083776,
    (43, 0, 1): -10133099161583616,
    (43, 0, 2): 20725794183577600,
    (43, 0, 3): 22952305229824,
    (43, 0, 4): -61063160659968,
    (43, 0, 5): 583176028160,
    (43, 0, 6): 6140461056,
    (43, 1, 0): -174183532560646144,
    (43, 1, 1): -81781399996071936,
    (43, 1, 2): 15523407672115200,
    (43, 1, 3): 807399359250432,
    (43, 1, 4): -44052170932224,
    (43, 1, 5): 136876916736,
    (43, 2, 0): -23735475336380416,
    (43, 2, 1): -50213437615112192,
    (43, 2, 2): -192032014336000,
    (43, 2, 3): 531941833048064,
    (43, 2, 4): -8031697895424,
    (43, 3, 0): 9492827985674240,
    (43, 3, 1): -2318575012413440,
    (43, 3, 2): -2315227236401152,
    (43, 3, 3): 146911319293952,
    (43, 3, 4): -3394948300800,
    (43, 4, 0): -2895966256496640,
    (43, 4, 1): 4025735878541312,
    (43, 4, 2): -526820399120384,
    (43, 5, 0): -2626816158203904,
    (43, 5, 1): 744850236375040,
    (43, 6, 0): -372291506536448,
    (43, 7, 0): 1269825536,
    (44, 0, 0): 385057768140177408,
    (44, 0, 1): -181269885001662464,
    (44, 0, 2): -157636982074245120,
    (44, 0, 3): 606930418532352,
    (44, 0, 4): 890532477796352,
    (44, 0, 5): -14807570841600,
    (44, 0, 6): 8589934592,
    (44, 1, 0): 344684250924056576,
    (44, 1, 1): -65560270591754240,
    (44, 1, 2): -122063535340519424,
    (44, 1, 3): -4175351785717760,
    (44, 1, 4): 518929625645056,
    (44, 1, 5): -3734541172736,
    (44, 2, 0): 123124119532208128,
    (44, 2, 1): -8113312944357376,
    (44, 2, 2): -28151472663298048,
    (44, 2, 3): -2190230752854016,
    (44, 2, 4): 72916246986752,
    (44, 3, 0): 40228363964514304,
    (44, 3, 1): -6570784701022208,
    (44, 3, 2): -1555320400773120,
    (44, 3, 3): -265423404662784,
    (44, 4, 0): 12021440589070336,
    (44, 4, 1): -1674585401458688,
    (44, 4, 2): 26369656356864,
    (44, 4, 3): 8513978368000,
    (44, 5, 0): 1500681504555008,
    (44, 5, 1): -3130058080256,
    (44, 6, 0): 318699995136,
    (45, 0, 0): 647392446434508800,
    (45, 0, 1): 719027828007370752,
    (45, 0, 2): -25321752787681280,
    (45, 0, 3): -17210655509577728,
    (45, 0, 4): 772578717204480,
    (45, 0, 5): -6198174679040,
    (45, 0, 6): 17179869184,
    (45, 1, 0): 1307049945076858880,
    (45, 1, 1): 1400071652443684864,
    (45, 1, 2): -18984945154260992,
    (45, 1, 3): -27736397628571648,
    (45, 1, 4): 1102123638980608,
    (45, 1, 5): -8398506557440,
    (45, 1, 6): 9997123584,
    (45, 2, 0): 648023463029637120,
    (45, 2, 1): 932768026544046080,
    (45, 2, 2): 37674827397464064,
    (45, 2, 3): -13148387394191360,
    (45, 2, 4): 251417285623808,
    (45, 3, 0): 64724779193597952,
    (45, 3, 1): 249861415198785536,
    (45, 3, 2): 23337200837984256,
    (45, 3, 3): -1833813420277760,
    (45, 4, 0): -19348800288063488,
    (45, 4, 1): 22971222010626048,
    (45, 4, 2): 3234740056358912,
    (45, 5, 0): -3179797425422336,
    (45, 5, 1): -15393263452160,
    (45, 5, 2): -5596044066816,
    (45, 6, 0): 831478824960,
    (46, 0, 0): -1058345912432066560,
    (46, 0, 1): 349591921074634752,
    (46, 0, 2): 88172036454612992,
    (46, 0, 3): -19791484177874944,
    (46, 0, 4): 655738426884096,
    (46, 0, 5): -4988872949760,
    (46, 0, 6): 18387828736,
    (46, 1, 0): -2538119238627885056,
    (46, 1, 1): 297576087548854272,
    (46, 1, 2): 222483188583235584,
    (46, 1, 3): -24821966770798592,
    (46, 1, 4): 494243361587200,
    (46, 1, 5): -1887034146816,
    (46, 2, 0): -2373559662625685504,
    (46, 2, 1): -69688492224937984,
    (46, 2, 2): 181207294980128768,
    (46, 2, 3): -13282747661418496,
    (46, 2, 4): 229929799122944,
    (46, 2, 5): -1243078459392,
    (46, 3, 0): -1116088569450987520,
    (46, 3, 1): -169624421487607808,
    (46, 3, 2): 65161550792491008,
    (46, 3, 3): -2464892183379968,
    (46, 4, 0): -258186594584887296,
    (46, 4, 1): -68025087026003968,
    (46, 4, 2): 8395144168472576,
    (46, 5, 0): -22973549748682752,
    (46, 5, 1): -8371099003781120,
    (46, 6, 0): 2103829331968,
    (46, 6, 1): 1015809048576,
    (47, 0, 0): 1105633708519456768,
    (47, 0, 1): 227994731135631360,
    (47, 0, 2): -44319114692395008,
    (47, 0, 3): -9692194998845440,
    (47, 0, 4): 417451493818368,
    (47, 0, 5): -4046396063744,
    (47, 0, 6): 20803747840,
    (47, 1, 0): 821141122146369536,
    (47, 1, 1): 411371555294019584,
    (47, 1, 2): 38207548028878848,
    (47, 1, 3): -12663924746878976,
    (47, 1, 4): 282542678736896,
    (47, 1, 5): -1339056717824,
    (47, 2, 0): 163710134550265856,
    (47, 2, 1): -2611645058646016,
    (47, 2, 2): 74602873798787072,
    (47, 2, 3): -5290156047204352,
    (47, 2, 4): 49627306917888,
    (47, 3, 0): 192379082053255168,
    (47, 3, 1): -172829859666460672,
    (47, 3, 2): 33141472639320064,
    (47, 3, 3): -1239107292364800,
    (47, 3, 4): 20933477662720,
    (47, 4, 0): 169375454111727616,
    (47, 4, 1): -72334333678977024,
    (47, 4, 2): 5439040417431552,
    (47, 5, 0): 52175289823789056,
    (47, 5, 1): -9279491071279104,
    (47, 6, 0): 5449507588276224,
    (47, 7, 0): -42146463744,
    (48, 0, 0): -3440750115311058944,
    (48, 0, 1): 30962247438172160,
    (48, 0, 2): 1048784559316926464,
    (48, 0, 3): 20273894904561664,
    (48, 0, 4): -4447069267820544,
    (48, 0, 5): 57636850499584,
    (48, 0, 6): -170993385472,
    (48, 0, 7): 29360128,
    (48, 1, 0): -2613230176456146944,
    (48, 1, 1): -452102482508644352,
    (48, 1, 2): 745908988930949120,
    (48, 1, 3): 37989712656334848,
    (48, 1, 4): -2503840305774592,
    (48, 1, 5): 15233947009024,
    (48, 2, 0): -947917355449581568,
    (48, 2, 1): -97435950199603200,
    (48, 2, 2): 151501297021878272,
    (48, 2, 3): 14998730440704000,
    (48, 2, 4): -345537500938240,
    (48, 3, 0): -414787235410345984,
    (48, 3, 1): 65936394836508672,
    (48, 3, 2): 4539106658877440,
    (48, 3, 3): 1641320443543552,
    (48, 4, 0): -134275109568380928,
    (48, 4, 1): 17976861233512448,
    (48, 4, 2): -243350498181120,
    (48, 4, 3): -74712717721600,
    (48, 5, 0): -16270552062754816,
    (48, 5, 1): 42026808639488,
    (48, 6, 0): -5879625678848,
    (49, 0, 0): -3517311308976357376,
    (49, 0, 1): -6748644041614688256,
    (49, 0, 2): -82419391618088960,
    (49, 0, 3): 120903398101876736,
    (49, 0, 4): -3871384736366592,
    (49, 0, 5): 20000588955648,
    (49, 0, 6): 10099884032,
    (49, 1, 0): -7101618060456361984,
    (49, 1, 1): -13039968899083272192,
    (49, 1, 2): -287752157313105920,
    (49, 1, 3): 192971707009466368,
    (49, 1, 4): -5496133820350464,
    (49, 1, 5): 30064502636544,
    (49, 1, 6): -34116468736,
    (49, 2, 0): -2445819085766787072,
    (49, 2, 1): -8211165678183383040,
    (49, 2, 2): -486515393645510656,
    (49, 2, 3): 86385109405532160,
    (49, 2, 4): -1222025100132352,
    (49, 3, 0): 440653388187697152,
    (49, 3, 1): -2071975848751136768,
    (49, 3, 2): -205884541888364544,
    (49, 3, 3): 11440577300135936,
    (49, 4, 0): 293850205567057920,
    (49, 4, 1): -179782993630461952,
    (49, 4, 2): -24919770289668096,
    (49, 5, 0): 31482512664428544,
    (49, 5, 1): 206875152875520,
    (49, 5, 2): 69090913812480,
    (49, 6, 0): -15775884640256,
    (50, 0, 0): 13889101250810609664,
    (50, 0, 1): -1472677078150152192,
    (50, 0, 2): -1254076574362238976,
    (50, 0, 3): 149766677842624512,
    (50, 0, 4): -3581641947611136,
    (50, 0, 5): 14512694493184,
    (50, 0, 6): 20199768064,
    (50, 1, 0): 31093867776109969408,
    (50, 1, 1): 934109619708493824,
    (50, 1, 2): -2423007397766234112,
    (50, 1, 3): 177527185001676800,
    (50, 1, 4): -2610480048766976,
    (50, 1, 5): 4944480436224,
    (50, 2, 0): 27999291887417556992,
    (50, 2, 1): 3308055636117291008,
    (50, 2, 2): -1758788832834093056,
    (50, 2, 3): 92886705136205824,
    (50, 2, 4): -1198521092931584,
    (50, 2, 5): 4716792643584,
    (50, 3, 0): 12643084131039707136,
    (50, 3, 1): 2494058539232788480,
    (50, 3, 2): -580607523229270016,
    (50, 3, 3): 16485137554341888,
    (50, 4, 0): 2789239886161379328,
    (50, 4, 1): 770256705412923392,
    (50, 4, 2): -69613138735005696,
    (50, 5, 0): 236112165637980160,
    (50, 5, 1): 83333710564294656,
    (50, 6, 0): -40989557260288,
    (50, 6, 1): -17678584512512,
    (51, 0, 0): -6151917090988097536,
    (51, 0, 1): 486388759756013568,
    (51, 0, 2): -723795310425407488,
    (51, 0, 3): 106894520452382720,
    (51, 0, 4): -2751089761845248,
    (51, 0, 5): 8027293876224,
    (51, 0, 6): 30735859712,
    (51, 1, 0): -7649478316298076160,
    (51, 1, 1): 3397301264072048640,
    (51, 1, 2): -1530391577363480576,
    (51, 1, 3): 115125333501411328,
    (51, 1, 4): -1698099072335872,
    (51, 1, 5): 2169830899712,
    (51, 2, 0): -8504873967293562880,
    (51, 2, 1): 5581560518004441088,
    (51, 2, 2): -1079400627022331904,
    (51, 2, 3): 41810577303011328,
    (51, 2, 4): -271134675173376,
    (51, 3, 0): -7512276969006825472,
    (51, 3, 1): 3431644208581050368,
    (51, 3, 2): -351229500836544512,
    (51, 3, 3): 9121942124625920,
    (51, 3, 4): -114253470105600,
    (51, 4, 0): -3512884095342346240,
    (51, 4, 1): 949016392483471360,
    (51, 4, 2): -49246200913723392,
    (51, 5, 0): -794853068289081344,
    (51, 5, 1): 101323731040731136,
    (51, 6, 0): -69889825125171200,
    (51, 7, 0): 1054821318656,
    (52, 0, 0): 21329047835226669056,
    (52, 0, 1): 7257550799507554304,
    (52, 0, 2): -5795358664239874048,
    (52, 0, 3): -224687400159281152,
    (52, 0, 4): 20974593049100288,
    (52, 0, 5): -158387656458240,
    (52, 0, 6): 42144366592,
    (52, 1, 0): 13821789148958162944,
    (52, 1, 1): 7289336031399116800,
    (52, 1, 2): -3745951109840109568,
    (52, 1, 3): -272240863596249088,
    (52, 1, 4): 11270625544896512,
    (52, 1, 5): -39758646476800,
    (52, 2, 0): 6539513150440472576,
    (52, 2, 1): 704808716003704832,
    (52, 2, 2): -602949415493173248,
    (52, 2, 3): -92394264721358848,
    (52, 2, 4): 1494236906127360,
    (52, 3, 0): 4213568461625884672,
    (52, 3, 1): -795387618844999680,
    (52, 3, 2): 21762208983678976,
    (52, 3, 3): -9377097038430208,
    (52, 4, 0): 1410265244609019904,
    (52, 4, 1): -184274946246049792,
    (52, 4, 2): 1938398063362048,
    (52, 4, 3): 573340909568000,
    (52, 5, 0): 165120214592126976,
    (52, 5, 1): -469894554451968,
    (52, 6, 0): 87542674227200,
    (53, 0, 0): 7728176960567771136,
    (53, 0, 1): 54272879109441847296,
    (53, 0, 2): 2293071082145447936,
    (53, 0, 3): -741712951911645184,
    (53, 0, 4): 17030284063014912,
    (53, 0, 5): -75157632712704,
    (53, 0, 6): 84288733184,
    (53, 1, 0): 15509908933501255680,
    (53, 1, 1): 104437257649594040320,
    (53, 1, 2): 4782406432957923328,
    (53, 1, 3): -1178177900877185024,
    (53, 1, 4): 24562519607607296,
    (53, 1, 5): -98632581775360,
    (53, 1, 6): 51556384768,
    (53, 2, 0): -8814025644540166144,
    (53, 2, 1): 63160790148662165504,
    (53, 2, 2): 4597442224857284608,
    (53, 2, 3): -506809285917802496,
    (53, 2, 4): 5359427293020160,
    (53, 3, 0): -11698488365857898496,
    (53, 3, 1): 15223662424218402816,
    (53, 3, 2): 1589963812872650752,
    (53, 3, 3): -64559844195041280,
    (53, 4, 0): -3283311135524126720,
    (53, 4, 1): 1255961447603634176,
    (53, 4, 2): 174046514849513472,
    (53, 5, 0): -274440519285735424,
    (53, 5, 1): -2333657863815168,
    (53, 5, 2): -732220511748096,
    (53, 6, 0): 241873230757888,
    (54, 0, 0): -152545926578293440512,
    (54, 0, 1): -5217420168308719616,
    (54, 0, 2): 12348447965784834048,
    (54, 0, 3): -976946867604553728,
    (54, 0, 4): 16432338716065792,
    (54, 0, 5): -69361574346752,
    (54, 0, 6): 87778394112,
    (54, 1, 0): -325167492920520998912,
    (54, 1, 1): -40247360351461441536,
    (54, 1, 2): 21305946340012851200,
    (54, 1, 3): -1114130442321133568,
    (54, 1, 4): 11950493098049536,
    (54, 1, 5): -24949062369280,
    (54, 2, 0): -285311376189617602560,
    (54, 2, 1): -50294370278030966784,
    (54, 2, 2): 14584756486342180864,
    (54, 2, 3): -575059289442353152,
    (54, 2, 4): 5583976370536448,
    (54, 2, 5): -15827692683264,
    (54, 3, 0): -125000952895472926720,
    (54, 3, 1): -28495821957775753216,
    (54, 3, 2): 4557117630003019776,
    (54, 3, 3): -98869339565850624,
    (54, 4, 0): -26581837815132192768,
    (54, 4, 1): -7576587483035467776,
    (54, 4, 2): 518276443394801664,
    (54, 5, 0): -2162266044964536320,
    (54, 5, 1): -745405382876200960,
    (54, 6, 0): 645435068776448,
    (54, 6, 1): 257096394211328,
    (55, 0, 0): 67265764034405728256,
    (55, 0, 1): -44734255098671136768,
    (55, 0, 2): 12143252707762765824,
    (55, 0, 3): -847472776364163072,
    (55, 0, 4): 13290930916294656,
    (55, 0, 5): -65352222375936,
    (55, 0, 6): 94757715968,
    (55, 1, 0): 165488708957402824704,
    (55, 1, 1): -103213969050076971008,
    (55, 1, 2): 18640693045766389760,
    (55, 1, 3): -834182043016364032,
    (55, 1, 4): 8241696496156672,
    (55, 1, 5): -19763828883456,
    (55, 2, 0): 206412815417225510912,
    (55, 2, 1): -95923589101106757632,
    (55, 2, 2): 10748797064361017344,
    (55, 2, 3): -281314488815190016,
    (55, 2, 4): 1320766062723072,
    (55, 3, 0): 140737834115227713536,
    (55, 3, 1): -43999040746884694016,
    (55, 3, 2): 3089859124469432320,
    (55, 3, 3): -59394144153370624,
    (55, 3, 4): 556349175889920,
    (55, 4, 0): 52389977487816261632,
    (55, 4, 1): -10270305709006520320,
    (55, 4, 2): 396109537720926208,
    (55, 5, 0): 10119221468609904640,
    (55, 5, 1): -983065288364785664,
    (55, 6, 0): 796566446573355008,
    (55, 7, 0): -21194782801920,
    (56, 0, 0): -87622034350120370176,
    (56, 0, 1): -74138257065773105152,
    (56, 0, 2): 26207149919110692864,
    (56, 0, 3): 1701208370960138240,
    (56, 0, 4): -84600272931782656,
    (56, 0, 5): 579820584960000,
    (56, 0, 6): -736586891264,
    (56, 0, 7): 33554432,
    (56, 1, 0): -49745389293423034368,
    (56, 1, 1): -50692039118124220416,
    (56, 1, 2): 14210653288914747392,
    (56, 1, 3): 1686104371139444736,
    (56, 1, 4): -45039131599831040,
    (56, 1, 5): 148498225823744,
    (56, 2, 0): -53187737274007158784,
    (56, 2, 1): 5035626572174852096,
    (56, 2, 2): 877896804270604288,
    (56, 2, 3): 517233033032499200,
    (56, 2, 4): -5944218363101184,
    (56, 3, 0): -43887604275968212992,
    (56, 3, 1): 9398153282834137088,
    (56, 3, 2): -505762985713598464,
    (56, 3, 3): 49688393029779456,
    (56, 4, 0): -14194305054248271872,
    (56, 4, 1): 1778901850074906624,
    (56, 4, 2): -13530294812409856,
    (56, 4, 3): -3894707885178880,
    (56, 5, 0): -1590639958031335424,
    (56, 5, 1): 4486245006704640,
    (56, 6, 0): -1090995244498944,
    (57, 0, 0): 103979108196730011648,
    (57, 0, 1): -382950083514568015872,
    (57, 0, 2): -24029659499277058048,
    (57, 0, 3): 4028505051054997504,
    (57, 0, 4): -68456899615391744,
    (57, 0, 5): 170974058119168,
    (57, 0, 6): 28454158336,
    (57, 1, 0): 212215384678720339968,
    (57, 1, 1): -734515445442130477056,
    (57, 1, 2): -46088832533370241024,
    (57, 1, 3): 6408051863731568640,
    (57, 1, 4): -98678538999169024,
    (57, 1, 5): 284224829521920,
    (57, 1, 6): -159484215296,
    (57, 2, 0): 277573349254132400128,
    (57, 2, 1): -430623848727798874112,
    (57, 2, 2): -35862648717379108864,
    (57, 2, 3): 2677821475582377984,
    (57, 2, 4): -21262332772483072,
    (57, 3, 0): 143554243769082576896,
    (57, 3, 1): -99929338341685723136,
    (57, 3, 2): -10934113929541976064,
    (57, 3, 3): 331178405481414656,
    (57, 4, 0): 30156965285197774848,
    (57, 4, 1): -7844230161623941120,
    (57, 4, 2): -1108851984422666240,
    (57, 5, 0): 2109491945700065280,
    (57, 5, 1): 22651790126219264,
    (57, 5, 2): 6781525441904640,
    (57, 6, 0): -3111294710317056,
    (58, 0, 0): 1445475336400834396160,
    (58, 0, 1): 183017281657082216448,
    (58, 0, 2): -99119724198797246464,
    (58, 0, 3): 5569668509476061184,
    (58, 0, 4): -70321190299762688,
    (58, 0, 5): 129373004890112,
    (58, 0, 6): 56908316672,
    (58, 1, 0): 2971316985939630227456,
    (58, 1, 1): 555261306102786031616,
    (58, 1, 2): -160433102815842271232,
    (58, 1, 3): 6209486643645120512,
    (58, 1, 4): -50086757554716672,
    (58, 1, 5): 44890461306880,
    (58, 2, 0): 2559339817991764180992,
    (58, 2, 1): 554177136338709512192,
    (58, 2, 2): -106148001298922864640,
    (58, 2, 3): 3185877031086718976,
    (58, 2, 4): -23304327191855104,
    (58, 2, 5): 48501287288832,
    (58, 3, 0): 1095652959613163143168,
    (58, 3, 1): 273849369038757560320,
    (58, 3, 2): -31939625936031318016,
    (58, 3, 3): 535135236258791424,
    (58, 4, 0): 226300089185551253504,
    (58, 4, 1): 66016063771872591872,
    (58, 4, 2): -3490458274988294144,
    (58, 5, 0): 17814608536521408512,
    (58, 5, 1): 6040180467624312832,
    (58, 6, 0): -8530292528644096,
    (58, 6, 1): -3206651641331712,
    (59, 0, 0): -1160559609574867337216,
    (59, 0, 1): 732177213019385757696,
    (59, 0, 2): -120263561499348303872,
    (59, 0, 3): 5414065623913201664,
    (59, 0, 4): -62520842495459328,
    (59, 0, 5): 72602127171584,
    (59, 0, 6): 85899345920,
    (59, 1, 0): -2986942189662420074496,
    (59, 1, 1): 1413697321703596621824,
    (59, 1, 2): -165632896163490299904,
    (59, 1, 3): 5123453327618605056,
    (59, 1, 4): -37161654772826112,
    (59, 1, 5): 20684562497536,
    (59, 2, 0): -3302868459974809354240,
    (59, 2, 1): 1114093980728850120704,
    (59, 2, 2): -87314503301473501184,
    (59, 2, 3): 1661801023817121792,
    (59, 2, 4): -5699536492167168,
    (59, 3, 0): -1942102215412076773376,
    (59, 3, 1): 451228552471743823872,
    (59, 3, 2): -23572959457215250432,
    (59, 3, 3): 345379192738676736,
    (59, 3, 4): -2428710892339200,
    (59, 4, 0): -638450839250297421824,
    (59, 4, 1): 96079288328154775552,
    (59, 4, 2): -2857849284764631040,
    (59, 5, 0): -111880829349616680960,
    (59, 5, 1): 8563789522167398400,
    (59, 6, 0): -8156830820015800320,
    (59, 7, 0): 355529893347328,
    (60, 0, 0): 164291314406475694080,
    (60, 0, 1): 441857166640574103552,
    (60, 0, 2): -86182008369268654080,
    (60, 0, 3): -10276968059054850048,
    (60, 0, 4): 324899638693855232,
    (60, 0, 5): -1104699948269568,
    (60, 0, 6): 115964116992,
    (60, 1, 0): 212408124669022961664,
    (60, 1, 1): 144434719349027110912,
    (60, 1, 2): -24566885828410736640,
    (60, 1, 3): -9225340197028233216,
    (60, 1, 4): 167846222416052224,
    (60, 1, 5): -276622737408000,
    (60, 2, 0): 595590430536935407616,
    (60, 2, 1): -166225467235041804288,
    (60, 2, 2): 12962569877557608448,
    (60, 2, 3): -2654450686992842752,
    (60, 2, 4): 21569226976264192,
    (60, 3, 0): 462284043469855916032,
    (60, 3, 1): -99536923234437955584,
    (60, 3, 2): 5331641250133049344,
    (60, 3, 3): -244697913710608384,
    (60, 4, 0): 137490651645449601024,
    (60, 4, 1): -15959978179565715456,
    (60, 4, 2): 83606417499488256,
    (60, 4, 3): 23629314046033920,
    (60, 5, 0): 14621970260543143936,
    (60, 5, 1): -37176270278098944,
    (60, 6, 0): 11650730419027968,
    (61, 0, 0): -1799422238315136417792,
    (61, 0, 1): 2407192015228039593984,
    (61, 0, 2): 186423128875281154048,
    (61, 0, 3): -19621444704639385600,
    (61, 0, 4): 244322203930198016,
    (61, 0, 5): -580542139465728,
    (61, 0, 6): 231928233984,
    (61, 1, 0): -3658027405233455366144,
    (61, 1, 1): 4597045238251271487488,
    (61, 1, 2): 347931511731890683904,
    (61, 1, 3): -31318447973885542400,
    (61, 1, 4): 358257258112483328,
    (61, 1, 5): -743819616190464,
    (61, 1, 6): 147505283072,
    (61, 2, 0): -3269713961173200666624,
    (61, 2, 1): 2625306133554731679744,
    (61, 2, 2): 241951493935423553536,
    (61, 2, 3): -12819779583813353472,
    (61, 2, 4): 76427723261607936,
    (61, 3, 0): -1326269026250092707840,
    (61, 3, 1): 588387475540628471808,
    (61, 3, 2): 67734273347819667456,
    (61, 3, 3): -1550107789018267648,
    (61, 4, 0): -236921516885920448512,
    (61, 4, 1): 43609719711528386560,
    (61, 4, 2): 6475337297058332672,
    (61, 5, 0): -14192271765190737920,
    (61, 5, 1): -192507596064686080,
    (61, 5, 2): -55613550697119744,
    (61, 6, 0): 34431290375667712,
    (62, 0, 0): -12058406016683012521984,
    (62, 0, 1): -2296187291612611608576,
    (62, 0, 2): 683936905610806689792,
    (62, 0, 3): -28366485202946490368,
    (62, 0, 4): 260910810736361472,
    (62, 0, 5): -591949572603904,
    (62, 0, 6): 236223201280,
    (62, 1, 0): -24110291102580569276416,
    (62, 1, 1): -5576538240534219587584,
    (62, 1, 2): 1063394755477604663296,
    (62, 1, 3): -31085441393872601088,
    (62, 1, 4): 186298089114435584,
    (62, 1, 5): -208995256107008,
    (62, 2, 0): -20486173693677911670784,
    (62, 2, 1): -5032472951549675438080,
    (62, 2, 2): 688944900682681417728,
    (62, 2, 3): -15899343827366838272,
    (62, 2, 4): 87896149230354432,
    (62, 2, 5): -128092836200448,
    (62, 3, 0): -8612116009836380946432,
    (62, 3, 1): -2294232278033399545856,
    (62, 3, 2): 201785383039373672448,
    (62, 3, 3): -2625971121777803264,
    (62, 4, 0): -1737159057848431280128,
    (62, 4, 1): -516203069698478178304,
    (62, 4, 2): 21386081076391182336,
    (62, 5, 0): -132987335971251945472,
    (62, 5, 1): -44625559770372243456,
    (62, 6, 0): 97058278692880384,
    (62, 6, 1): 34944312307351552,
    (63, 0, 0): 17288634422331973828608,
    (63, 0, 1): -8163404828556855869440,
    (63, 0, 2): 936130603444206567424,
    (63, 0, 3): -29988836599962533888,
    (63, 0, 4): 242777115215265792,
    (63, 0, 5): -609541758648320,
    (63, 0, 6): 244813135872,
    (63, 1, 0): 41026242663385961332736,
    (63, 1, 1): -14442640018016856702976,
    (63, 1, 2): 1220692199565099532288,
    (63, 1, 3): -27629171534496530432,
    (63, 1, 4): 145602449351114752,
    (63, 1, 5): -179546812841984,
    (63, 2, 0): 41071008267760163618816,
    (63, 2, 1): -10463790998945292877824,
    (63, 2, 2): 612042623478061334528,
    (63, 2, 3): -8737889377759264768,
    (63, 2, 4): 22506457559728128,
    (63, 3, 0): 22010892083787038982144,
    (63, 3, 1): -3955646403560045805568,
    (63, 3, 2): 159450411575508205568,
    (63, 3, 3): -1805668130286993408,
    (63, 3, 4): 9539425025392640,
    (63, 4, 0): 6689976824371984990208,
    (63, 4, 1): -795949029550861582336,
    (63, 4, 2): 18629976803862642688,
    (63, 5, 0): 1097838348598113206272,
    (63, 5, 1): -67525116837165531136,
    (63, 6, 0): 75688252501668134912,
    (63, 7, 0): -5112423421837312,
    (64, 0, 0): 29975959119778021376,
    (64, 0, 1): -1283922210567799963648,
    (64, 0, 2): 89349164807216955392,
    (64, 0, 3): 54004492719148236800,
    (64, 0, 4): -1097068512939081728,
    (64, 0, 5): 3884712019886080,
    (64, 0, 6): -1803886264320,
    (64, 1, 0): -3712975261337049366528,
    (64, 1, 1): 1370136553375018254336,
    (64, 1, 2): -195070735051181260800,
    (64, 1, 3): 45478694427102806016,
    (64, 1, 4): -566265805612777472,
    (64, 1, 5): 979832364072960,
    (64, 2, 0): -7438654601078817947648,
    (64, 2, 1): 2262754472333152354304,
    (64, 2, 2): -173395514088847572992,
    (64, 2, 3): 12514421719898783744,
    (64, 2, 4): -72825671629406208,
    (64, 3, 0): -4729071674211730194432,
    (64, 3, 1): 930333000539295449088,
    (64, 3, 2): -43019754491124645888,
    (64, 3, 3): 1120587650772762624,
    (64, 4, 0): -1273134818201467617280,
    (64, 4, 1): 131966533583429959680,
    (64, 4, 2): -460026332097544192,
    (64, 4, 3): -128874125648199680,
    (64, 5, 0): -128039805186977300480,
    (64, 5, 1): 270015489642594304,
    (64, 6, 0): -108236677331288064,
    (65, 0, 0): 17871436242910734974976,
    (65, 0, 1): -13617155890911469633536,
    (65, 0, 2): -1203474410424080793600,
    (65, 0, 3): 86174408544897466368,
    (65, 0, 4): -794363066207698944,
    (65, 0, 5): 899125633613824,
    (65, 0, 6): 34359738368,
    (65, 1, 0): 36180667124123179155456,
    (65, 1, 1): -25812528440502445408256,
    (65, 1, 2): -2227149369920928612352,
    (65, 1, 3): 138416510018802155520,
    (65, 1, 4): -1174776325433458688,
    (65, 1, 5): 1725958377701376,
    (65, 1, 6): -420906795008,
    (65, 2, 0): 28423981014519734337536,
    (65, 2, 1): -14377145688161077166080,
    (65, 2, 2): -1446189466454295838720,
    (65, 2, 3): 55822117621775466496,
    (65, 2, 4): -249517207392878592,
    (65, 3, 0): 10173287576017200742400,
    (65, 3, 1): -3106248355947367890944,
    (65, 3, 2): -381067493211499397120,
    (65, 3, 3): 6636180133990367232,
    (65, 4, 0): 1615299194444113248256,
    (65, 4, 1): -212723147154246336512,
    (65, 4, 2): -34790916250878869504,
    (65, 5, 0): 81577574987236114432,
    (65, 5, 1): 1450398764958220288,
    (65, 5, 2): 407819610495123456,
    (65, 6, 0): -333636542771757056,
    (66, 0, 0): 89812585208873379430400,
    (66, 0, 1): 21205108773481433006080,
    (66, 0, 2): -4166505195261814374400,
    (66, 0, 3): 129787830286306770944,
    (66, 0, 4): -887908415987253248,
    (66, 0, 5): 706436220846080,
    (66, 0, 6): 68719476736,
    (66, 1, 0): 175748524775801857507328,
    (66, 1, 1): 46342138470778020036608,
    (66, 1, 2): -6302842715659049107456,
    (66, 1, 3): 140599421855594446848,
    (66, 1, 4): -626044603547516928,
    (66, 1, 5): 246771640958976,
    (66, 2, 0): 147792166848223627968512,
    (66, 2, 1): 39531606103821494779904,
    (66, 2, 2): -4028647208768778534912,
    (66, 2, 3): 71857363555941613568,
    (66, 2, 4): -297239740069969920,
    (66, 2, 5): 319750114639872,
    (66, 3, 0): 61225399461318202753024,
    (66, 3, 1): 17095141541064275394560,
    (66, 3, 2): -1156882817196658524160,
    (66, 3, 3): 11719589041966940160,
    (66, 4, 0): 12108073039384677449728,
    (66, 4, 1): 3655942816021386100736,
    (66, 4, 2): -119725267235186409472,
    (66, 5, 0): 904120854851665002496,
    (66, 5, 1): 302131816615930494976,
    (66, 6, 0): -967990563712270336,
    (66, 6, 1): -337319735731421184,
    (67, 0, 0): -207336791702476932775936,
    (67, 0, 1): 73139034409249158463488,
    (67, 0, 2): -6196507230898692816896,
    (67, 0, 3): 146622004218440974336,
    (67, 0, 4): -870549326407925760,
    (67, 0, 5): 405719790649344,
    (67, 0, 6): 103079215104,
    (67, 1, 0): -457461388374175008161792,
    (67, 1, 1): 122693765079084858081280,
    (67, 1, 2): -7817773559471702802432,
    (67, 1, 3): 132958675036010446848,
    (67, 1, 4): -511094236276326400,
    (67, 1, 5): 117733643517952,
    (67, 2, 0): -426758635461413424857088,
    (67, 2, 1): 84421775680854709764096,
    (67, 2, 2): -3798718871605457453056,
    (67, 2, 3): 41362949450575642624,
    (67, 2, 4): -77272534738796544,
    (67, 3, 0): -214894695648041847750656,
    (67, 3, 1): 30566970303256803147776,
    (67, 3, 2): -968668317162261184512,
    (67, 3, 3): 8529495537332781056,
    (67, 3, 4): -33763282837831680,
    (67, 4, 0): -61913139525147806400512,
    (67, 4, 1): 5924335393852161523712,
    (67, 4, 2): -110338295036418981888,
    (67, 5, 0): -9694830635763200163840,
    (67, 5, 1): 484970828542926389248,
    (67, 6, 0): -640761992007320076288,
    (67, 7, 0): 64229710795636736,
    (68, 0, 0): 13000342885946806501376,
    (68, 0, 1): -6901964587328889421824,
    (68, 0, 2): 1481396047028741472256,
    (68, 0, 3): -252148098887172751360,
    (68, 0, 4): 3437702269078863872,
    (68, 0, 5): -4857092615700480,
    (68, 0, 6): 137438953472,
    (68, 1, 0): 67197684244738675310592,
    (68, 1, 1): -26866139064216936513536,
    (68, 1, 2): 2670605059342521597952,
    (68, 1, 3): -204137176542182637568,
    (68, 1, 4): 1742158582025027584,
    (68, 1, 5): -1214805729869824,
    (68, 2, 0): 85722395162962846285824,
    (68, 2, 1): -22605236888046227423232,
    (68, 2, 2): 1415649978488224481280,
    (68, 2, 3): -54459529317155078144,
    (68, 2, 4): 220316205783711744,
    (68, 3, 0): 45411391786547916308480,
    (68, 3, 1): -7715613440980767735808,
    (68, 3, 2): 293832285915526987776,
    (68, 3, 3): -4767949049053577216,
    (68, 4, 0): 11149966532838959349760,
    (68, 4, 1): -1001828940140557369344,
    (68, 4, 2): 2258073558313861120,
    (68, 4, 3): 634801481370828800,
    (68, 5, 0): 1062261338020784373760,
    (68, 5, 1): -1725047101605281792,
    (68, 6, 0): 882369999824486400,
    (69, 0, 0): -139415880023078363725824,
    (69, 0, 1): 69803632496421550161920,
    (69, 0, 2): 6753498922012993650688,
    (69, 0, 3): -342758271590053445632,
    (69, 0, 4): 2319067935072583680,
    (69, 0, 5): -2787261976412160,
    (69, 0, 6): 274877906944,
    (69, 1, 0): -279976191139566074200064,
    (69, 1, 1): 130579753237145272188928,
    (69, 1, 2): 12506102592821681717248,
    (69, 1, 3): -555540175236938858496,
    (69, 1, 4): 3484554383683747840,
    (69, 1, 5): -3498920877490176,
    (69, 1, 6): 180388626432,
    (69, 2, 0): -204335017681497953927168,
    (69, 2, 1): 70742500883818918969344,
    (69, 2, 2): 7766752455902277664768,
    (69, 2, 3): -221785139437086179328,
    (69, 2, 4): 736234360348344320,
    (69, 3, 0): -67026338745203365511168,
    (69, 3, 1): 14604378566040555094016,
    (69, 3, 2): 1958420643727072559104,
    (69, 3, 3): -26028843372564709376,
    (69, 4, 0): -9536943047157596815360,
    (69, 4, 1): 877236913606777372672,
    (69, 4, 2): 172479248426166386688,
    (69, 5, 0): -373527903695053783040,
    (69, 5, 1): -9775201340694200320,
    (69, 5, 2): -2694091621300961280,
    (69, 6, 0): 2866857478572736512,
    (70, 0, 0): -603337658418818304704512,
    (70, 0, 1): -162772340324156173189120,
    (70, 0, 2): 22742817830250815160320,
    (70, 0, 3): -536312287525322358784,
    (70, 0, 4): 2704323615305760768,
    (70, 0, 5): -3078082801958912,
    (70, 0, 6): 274877906944,
    (70, 1, 0): -1160688349473815350214656,
    (70, 1, 1): -334246605091161889570816,
    (70, 1, 2): 33736567019233303592960,
    (70, 1, 3): -576045906566263603200,
    (70, 1, 4): 1911673588214136832,
    (70, 1, 5): -1079445540569088,
    (70, 2, 0): -968130335734308720869376,
    (70, 2, 1): -275280503497103855583232,
    (70, 2, 2): 21372987676406719709184,
    (70, 2, 3): -294776701120283672576,
    (70, 2, 4): 914451588754440192,
    (70, 2, 5): -641101178339328,
    (70, 3, 0): -396192896949898031661056,
    (70, 3, 1): -114743261803717416976384,
    (70, 3, 2): 6048117780292860641280,
    (70, 3, 3): -47661630246992478208,
    (70, 4, 0): -77020980880314451623936,
    (70, 4, 1): -23611934873026455142400,
    (70, 4, 2): 614377641100605128704,
    (70, 5, 0): -5616474688134404112384,
    (70, 5, 1): -1882009899381718777856,
    (70, 6, 0): 8574543782853214208,
    (70, 6, 1): 2914618712663261184,
    (71, 0, 0): 2076928138630995271221248,
    (71, 0, 1): -559635015865191163232256,
    (71, 0, 2): 36070158077941738635264,
    (71, 0, 3): -639616981677853638656,
    (71, 0, 4): 2797711734922543104,
    (71, 0, 5): -3377699720527872,
    (71, 0, 6): 274877906944,
    (71, 1, 0): 4340159840070764637192192,
    (71, 1, 1): -905986986006350657486848,
    (71, 1, 2): 44522705226390476685312,
    (71, 1, 3): -573883305732893310976,
    (71, 1, 4): 1652396102000836608,
    (71, 1, 5): -987086563835904,
    (71, 2, 0): 3849621915103954538070016,
    (71, 2, 1): -602151295294440929755136,
    (71, 2, 2): 21180268814594415263744,
    (71, 2, 3): -176663523368292581376,
    (71, 2, 4): 251219302932283392,
    (71, 3, 0): 1855111928559913188458496,
    (71, 3, 1): -211818241277229497581568,
    (71, 3, 2): 5328541400849151164416,
    (71, 3, 3): -36514481541522391040,
    (71, 3, 4): 107668634620395520,
    (71, 4, 0): 514396362596738786131968,
    (71, 4, 1): -39996938763181685211136,
    (71, 4, 2): 596159551430648135680,
    (71, 5, 0): 77794910628341436383232,
    (71, 5, 1): -3188271979935586844672,
    (71, 6, 0): 4976143419928840503296,
    (71, 7, 0): -715089351050002432,
    (72, 0, 0): -315605344357096718598144,
    (72, 0, 1): 143372706626889062547456,
    (72, 0, 2): -16027590497871215984640,
    (72, 0, 3): 1056886746152798519296,
    (72, 0, 4): -9883096605706420224,
    (72, 0, 5): 16756557207306240,
    (72, 0, 6): -1924145348608,
    (72, 1, 0): -880944898733492249034752,
    (72, 1, 1): 277418863186510337802240,
    (72, 1, 2): -20550236199909582700544,
    (72, 1, 3): 834161263964585984000,
    (72, 1, 4): -5015160606332813312,
    (72, 1, 5): 4198347711709184,
    (72, 2, 0): -867102762286233254100992,
    (72, 2, 1): 186596535088305334648832,
    (72, 2, 2): -9271741750184874344448,
    (72, 2, 3): 218074352289650311168,
    (72, 2, 4): -635478207155404800,
    (72, 3, 0): -401976149357797394350080,
    (72, 3, 1): 57293453703933423779840,
    (72, 3, 2): -1763703523916170395648,
    (72, 3, 3): 18819917598622220288,
    (72, 4, 0): -91487215878278049955840,
    (72, 4, 1): 6977080489658309148672,
    (72, 4, 2): -9853856949391589376,
    (72, 4, 3): -2832962189378191360,
    (72, 5, 0): -8299311530043458453504,
    (72, 5, 1): 9654392500592312320,
    (72, 6, 0): -6327205409396359168,
    (73, 0, 0): 925546937154303042781184,
    (73, 0, 1): -325797170457821245865984,
    (73, 0, 2): -33659074952635650932736,
    (73, 0, 3): 1238044041163776720896,
    (73, 0, 4): -6043127012489428992,
    (73, 0, 5): 2656420092706816,
    (73, 1, 0): 1831233063002296981389312,
    (73, 1, 1): -595434498035378726895616,
    (73, 1, 2): -62747679423258725187584,
    (73, 1, 3): 2028779229173210152960,
    (73, 1, 4): -9319893489732812800,
    (73, 1, 5): 6471450563182592,
    (73, 1, 6): -481036337152,
    (73, 2, 0): 1262449215022108581560320,
    (73, 2, 1): -311119181189739773427712,
    (73, 2, 2): -37825680766405546344448,
    (73, 2, 3): 804700773213217488896,
    (73, 2, 4): -1973780739459645440,
    (73, 3, 0): 382803419077996835766272,
    (73, 3, 1): -60048960821363226968064,
    (73, 3, 2): -9233803757876905246720,
    (73, 3, 3): 93579991886252212224,
    (73, 4, 0): 47594111180218044514304,
    (73, 4, 1): -2735229920142067499008,
    (73, 4, 2): -790680508471550410752,
    (73, 5, 0): 1013325652093900423168,
    (73, 5, 1): 59306502302711414784,
    (73, 5, 2): 16122850957628276736,
    (73, 6, 0): -22045156391142817792,
    (74, 0, 0): 3682929347804259399237632,
    (74, 0, 1): 1087311047622680528289792,
    (74, 0, 2): -112204626671347561398272,
    (74, 0, 3): 2011172485594842398720,
    (74, 0, 4): -7262687717832523776,
    (74, 0, 5): 2155042790440960,
    (74, 1, 0): 6989181081539764333576192,
    (74, 1, 1): 2142889766047905747042304,
    (74, 1, 2): -164073195506372932796416,
    (74, 1, 3): 2146029930900359217152,
    (74, 1, 4): -5097261139578847232,
    (74, 1, 5): 754264976654336,
    (74, 2, 0): 5790536106457569268072448,
    (74, 2, 1): 1724043191929975118757888,
    (74, 2, 2): -103353724277624997412864,
    (74, 2, 3): 1100210879512992284672,
    (74, 2, 4): -2497791626022223872,
    (74, 2, 5): 1306013655367680,
    (74, 3, 0): 2344578432313273173934080,
    (74, 3, 1): 699726311724450360328192,
    (74, 3, 2): -28930235166250852417536,
    (74, 3, 3): 176777517847642374144,
    (74, 4, 0): 448719646885740254593024,
    (74, 4, 1): 139769446467031420370944,
    (74, 4, 2): -2896384673052429910016,
    (74, 5, 0): 31928821979273205121024,
    (74, 5, 1): 10819519317710448099328,
    (74, 6, 0): -68131101057222705152,
    (74, 6, 1): -22724380188827713536,
    (75, 0, 0): -17968752041271589714526208,
    (75, 0, 1): 3770200894016979287932928,
    (75, 0, 2): -187676309514792523005952,
    (75, 0, 3): 2521124078601258401792,
    (75, 0, 4): -7688137145130680320,
    (75, 0, 5): 1266637395197952,
    (75, 1, 0): -36077356460449341795991552,
    (75, 1, 1): 5951356626954144737918976,
    (75, 1, 2): -228198716614203525824512,
    (75, 1, 3): 2243653760733474193408,
    (75, 1, 4): -4493688629557723136,
    (75, 1, 5): 369435906932736,
    (75, 2, 0): -30837380332036610687238144,
    (75, 2, 1): 3859325595900330888921088,
    (75, 2, 2): -106968865905817677725696,
    (75, 2, 3): 684878890207671222272,
    (75, 2, 4): -675755998140432384,
    (75, 3, 0): -14390452776952696827543552,
    (75, 3, 1): 1330415855202089866100736,
    (75, 3, 2): -26682659254027054743552,
    (75, 3, 3): 141920652477012639744,
    (75, 3, 4): -309248640428277760,
    (75, 4, 0): -3878718381720432954834944,
    (75, 4, 1): 246550357805970621464576,
    (75, 4, 2): -2947122642756975984640,
    (75, 5, 0): -571238688749076600586240,
    (75, 5, 1): 19259449231305997287424,
    (75, 6, 0): -35605576850116737761280,
    (75, 7, 0): 7132116986149994496,
    (76, 0, 0): 4177006941074496029720576,
    (76, 0, 1): -1393061218958397918937088,
    (76, 0, 2): 109066086105431572217856,
    (76, 0, 3): -4042304924738190835712,
    (76, 0, 4): 24762549969887428608,
    (76, 0, 5): -12244161486913536,
    (76, 1, 0): 9108640656605292775079936,
    (76, 1, 1): -2215341458830225806721024,
    (76, 1, 2): 124853390282146667560960,
    (76, 1, 3): -3132305508153755172864,
    (76, 1, 4): 12438704676285710336,
    (76, 1, 5): -3061040371728384,
    (76, 2, 0): 7711993517938245183209472,
    (76, 2, 1): -1334819949303124052672512,
    (76, 2, 2): 52270100876155586347008,
    (76, 2, 3): -806067283922490753024,
    (76, 2, 4): 1561133888116359168,
    (76, 3, 0): 3258612879981283242934272,
    (76, 3, 1): -384039706073191147372544,
    (76, 3, 2): 9473032838129779736576,
    (76, 3, 3): -68714939051512168448,
    (76, 4, 0): 698886625030276886036480,
    (76, 4, 1): -44610548614146623012864,
    (76, 4, 2): 37771612284308684800,
    (76, 4, 3): 11475545435385364480,
    (76, 5, 0): 60763754127451456798720,
    (76, 5, 1): -46520945069852196864,
    (76, 6, 0): 39672072984223285248,
    (77, 0, 0): -5408364001482756019191808,
    (77, 0, 1): 1388652447124781336100864,
    (77, 0, 2): 150788874205272605720576,
    (77, 0, 3): -4057905393847402233856,
    (77, 0, 4): 14388789703216201728,
    (77, 0, 5): -7599824371187712,
    (77, 1, 0): -10426983356707528664678400,
    (77, 1, 1): 2436736506985517384990720,
    (77, 1, 2): 284295478137436665544704,
    (77, 1, 3): -6751787958774871883776,
    (77, 1, 4): 22401014497703624704,
    (77, 1, 5): -9364540533768192,
    (77, 2, 0): -6785973198982859926274048,
    (77, 2, 1): 1204965347909870072889344,
    (77, 2, 2): 168052623730577822973952,
    (77, 2, 3): -2669194768554131456000,
    (77, 2, 4): 4727847772634480640,
    (77, 3, 0): -1875597118552423566147584,
    (77, 3, 1): 206210665357811638075392,
    (77, 3, 2): 40061699941707720687616,
    (77, 3, 3): -308351759722529947648,
    (77, 4, 0): -185217404221951852937216,
    (77, 4, 1): 3186810219289913589760,
    (77, 4, 2): 3356535950455898898432,
    (77, 5, 0): 3374206563290334625792,
    (77, 5, 1): -325208009924004544512,
    (77, 5, 2): -87772010545057628160,
    (77, 6, 0): 152665454487348969472,
    (78, 0, 0): -20540818460957059915448320,
    (78, 0, 1): -6466284774109998804369408,
    (78, 0, 2): 503305000532357530255360,
    (78, 0, 3): -6826105955205460787200,
    (78, 0, 4): 18210023618295889920,
    (78, 0, 5): -8972014882652160,
    (78, 1, 0): -38553641142915028469415936,
    (78, 1, 1): -12380984770731926735552512,
    (78, 1, 2): 728028876470920662745088,
    (78, 1, 3): -7252367508180171751424,
    (78, 1, 4): 12800918990847213568,
    (78, 1, 5): -3140205208928256,
    (78, 2, 0): -31751734182554833870913536,
    (78, 2, 1): -9801319777831540301496320,
    (78, 2, 2): 456982238117279062556672,
    (78, 2, 3): -3733626536120054448128,
    (78, 2, 4): 6239827443675299840,
    (78, 2, 5): -1812544918388736,
    (78, 3, 0): -12729578044484889937444864,
    (78, 3, 1): -3900210099528020757839872,
    (78, 3, 2): 126896450176149130051584,
    (78, 3, 3): -597847772988736274432,
    (78, 4, 0): -2399207731011930982187008,
    (78, 4, 1): -761158120130355103006720,
    (78, 4, 2): 12561994426661843501056,
    (78, 5, 0): -166012393723319046635520,
    (78, 5, 1): -57540758441730737438720,
    (78, 6, 0): 489233192488779382784,
    (78, 6, 1): 160873862830888058880,
    (79, 0, 0): 137397547966997506845310976,
    (79, 0, 1): -22750480146570432265322496,
    (79, 0, 2): 882087849268524097732608,
    (79, 0, 3): -8930133657917428072448,
    (79, 0, 4): 20659700340608729088,
    (79, 0, 5): -10344205394116608,
    (79, 1, 0): 267739919716005311431049216,
    (79, 1, 1): -35253344807197171693649920,
    (79, 1, 2): 1060828313435171780034560,
    (79, 1, 3): -7911481241147981955072,
    (79, 1, 4): 12111023822929395712,
    (79, 1, 5): -3017059906617344,
    (79, 2, 0): 222576149763630793008087040,
    (79, 2, 1): -22451133466497112631934976,
    (79, 2, 2): 491935456336176272637952,
    (79, 2, 3): -2403921900521266348032,
    (79, 2, 4): 1826398764898713600,
    (79, 3, 0): 101390756610238041565429760,
    (79, 3, 1): -7627423948323310404632576,
    (79, 3, 2): 122041279842125048971264,
    (79, 3, 3): -501110401315771514880,
    (79, 3, 4): 794965461140766720,
    (79, 4, 0): 26746299209990702387691520,
    (79, 4, 1): -1394112282526043271593984,
    (79, 4, 2): 13356027504965913149440,
    (79, 5, 0): 3858479128165555443335168,
    (79, 5, 1): -107211762663291208335360,
    (79, 6, 0): 235555731592912627040256,
    (79, 7, 0): -64268008811782995968,
    (80, 0, 0): -41249871227866350941634560,
    (80, 0, 1): 10323978575268582495617024,
    (80, 0, 2): -599861023621676357648384,
    (80, 0, 3): 13967067567559647690752,
    (80, 0, 4): -61167890138946076672,
    (80, 0, 5): 42221246506598400,
    (80, 1, 0): -79089296305709481608609792,
    (80, 1, 1): 14983421588303338948001792,
    (80, 1, 2): -650117068477022561370112,
    (80, 1, 3): 10711771075750962135040,
    (80, 1, 4): -30762048360986705920,
    (80, 1, 5): 10555311626649600,
    (80, 2, 0): -61017230011395151520333824,
    (80, 2, 1): 8478427054996974980825088,
    (80, 2, 2): -261171728012226204794880,
    (80, 2, 3): 2732658979931594686464,
    (80, 2, 4): -3866362270330126336,
    (80, 3, 0): -24176968026311720869822464,
    (80, 3, 1): 2338848189049798752468992,
    (80, 3, 2): -45970084204447084314624,
    (80, 3, 3): 231470032304333651968,
    (80, 4, 0): -4954293355856162120007680,
    (80, 4, 1): 262231681592077498449920,
    (80, 4, 2): -123408701316462018560,
    (80, 4, 3): -42222233318284328960,
    (80, 5, 0): -415535317006559469371392,
    (80, 5, 1): 183755728784581459968,
    (80, 6, 0): -212965835174660014080,
    (81, 0, 0): 28308225881562088233500672,
    (81, 0, 1): -5414340746562637913915392,
    (81, 0, 2): -611410414794075447230464,
    (81, 0, 3): 12080239467676504686592,
    (81, 0, 4): -29061165445468389376,
    (81, 0, 5): 3377699720527872,
    (81, 1, 0): 52226210908908733520150528,
    (81, 1, 1): -8842812851331984005267456,
    (81, 1, 2): -1171182232001547616649216,
    (81, 1, 3): 20454683467353151242240,
    (81, 1, 4): -48167264652122652672,
    (81, 1, 5): 13510798882111488,
    (81, 2, 0): 31552147332584023884038144,
    (81, 2, 1): -3963787647180889510641664,
    (81, 2, 2): -683897715920168009334784,
    (81, 2, 3): 8081887740160985006080,
    (81, 2, 4): -10273524388636655616,
    (81, 3, 0): 7542495396658932621508608,
    (81, 3, 1): -510063773556562267734016,
    (81, 3, 2): -160258442640592937680896,
    (81, 3, 3): 930041464069117968384,
    (81, 4, 0): 379306602278734130053120,
    (81, 4, 1): 37893556187647321309184,
    (81, 4, 2): -13205740885116943597568,
    (81, 5, 0): -79142289809590313811968,
    (81, 5, 1): 1614634709951986008064,
    (81, 5, 2): 435946645987434430464,
    (81, 6, 0): -955771193944820416512,
    (82, 0, 0): 105091543709781084585590784,
    (82, 0, 1): 34689397378515991166713856,
    (82, 0, 2): -2058824965165658560004096,
    (82, 0, 3): 21051914328556798214144,
    (82, 0, 4): -37233509919285575680,
    (82, 0, 5): 2814749767106560,
    (82, 1, 0): 195486793253343800795856896,
    (82, 1, 1): 65026554862141125913739264,
    (82, 1, 2): -2953798154525944838094848,
    (82, 1, 3): 22277550389797215797248,
    (82, 1, 4): -26080626917079252992,
    (82, 1, 5): 985162418487296,
    (82, 2, 0): 160064657238575276238045184,
    (82, 2, 1): 50895189047164851168739328,
    (82, 2, 2): -1850776470335347895566336,
    (82, 2, 3): 11518613115148802457600,
    (82, 2, 4): -13492067602020696064,
    (82, 2, 5): 3001666743828480,
    (82, 3, 0): 63531958649762771019759616,
    (82, 3, 1): 19955015635725188163698688,
    (82, 3, 2): -511028772726199128424448,
    (82, 3, 3): 1841049750741759033344,
    (82, 4, 0): 11779029150789583054569472,
    (82, 4, 1): 3823917389236538575945728,
    (82, 4, 2): -50155089058879206588416,
    (82, 5, 0): 786791240856132082728960,
    (82, 5, 1): 283569385600874671243264,
    (82, 6, 0): -3192657604645356568576,
    (82, 6, 1): -1039112472118010314752,
    (83, 0, 0): -943064260474602812348563456,
    (83, 0, 1): 124299474230948187139473408,
    (83, 0, 2): -3763694957966482850447360,
    (83, 0, 3): 28719274679756558172160,
    (83, 0, 4): -42018584523366727680,
    (83, 0, 5): 1688849860263936,
    (83, 1, 0): -1796363257979949585604280320,
    (83, 1, 1): 189939405833523893987442688,
    (83, 1, 2): -4490471429542927958802432,
    (83, 1, 3): 25323697920507838988288,
    (83, 1, 4): -24521537021078929408,
    (83, 1, 5): 492581209243648,
    (83, 2, 0): -1461823282950698033550983168,
    (83, 2, 1): 119322587655059028848934912,
    (83, 2, 2): -2066020551500843077074944,
    (83, 2, 3): 7657545740974324449280,
    (83, 2, 4): -3680320504863916032,
    (83, 3, 0): -653709627477248346855309312,
    (83, 3, 1): 40104242905782799275393024,
    (83, 3, 2): -510857797282695309426688,
    (83, 3, 3): 1605453790059079663616,
    (83, 3, 4): -1831978786409676800,
    (83, 4, 0): -169596936518166408427732992,
    (83, 4, 1): 7254784132092015876767744,
    (83, 4, 2): -55546157377850194264064,
    (83, 5, 0): -24069553746006885460344832,
    (83, 5, 1): 551150825177814822551552,
    (83, 6, 0): -1444851906196244195704832,
    (83, 7, 0): 526744289889616920576,
    (84, 0, 0): 336623269406776202356588544,
    (84, 0, 1): -64621748395303763162693632,
    (84, 0, 2): 2843800794949267178389504,
    (84, 0, 3): -44233274676122442792960,
    (84, 0, 4): 116413546767899951104,
    (84, 0, 5): -13510798882111488,
    (84, 1, 0): 597994453793781037704151040,
    (84, 1, 1): -89107590642340891417640960,
    (84, 1, 2): 2991057212240016579756032,
    (84, 1, 3): -33613132325461960949760,
    (84, 1, 4): 58268416403849609216,
    (84, 1, 5): -3377699720527872,
    (84, 2, 0): 434292601441761434548568064,
    (84, 2, 1): -48494119438065341420273664,
    (84, 2, 2): 1172687753691042693513216,
    (84, 2, 3): -8504210860077188382720,
    (84, 2, 4): 7290342634294345728,
    (84, 3, 0): 164484978591998322520621056,
    (84, 3, 1): -13004924393695974600474624,
    (84, 3, 2): 202661889254214470729728,
    (84, 3, 3): -715476141566863605760,
    (84, 4, 0): 32550374819145753491931136,
    (84, 4, 1): -1419194642633838045429760,
    (84, 4, 2): 315967848344593629184,
    (84, 4, 3): 141033004095525355520,
    (84, 5, 0): 2649187788123647298764800,
    (84, 5, 1): -501129229352885551104,
    (84, 6, 0): 921318896488970977280,
    (85, 0, 0): -134065623265427792794222592,
    (85, 0, 1): 19318906133514539216404480,
    (85, 0, 2): 2252750973926548648755200,
    (85, 0, 3): -32505180670509291929600,
    (85, 0, 4): 55736548988337258496,
    (85, 0, 5): -9007199254740992,
    (85, 1, 0): -229464169369044695407132672,
    (85, 1, 1): 27660448539489025841430528,
    (85, 1, 2): 4404491662070325817901056,
    (85, 1, 3): -56359660558855775977472,
    (85, 1, 4): 91312452769773780992,
    (85, 1, 5): -10907155347537920,
    (85, 2, 0): -122894064385005919198511104,
    (85, 2, 1): 9969443368134957066092544,
    (85, 2, 2): 2555527271216900481220608,
    (85, 2, 3): -22310726297189728911360,
    (85, 2, 4): 19375963340575604736,
    (85, 3, 0): -21158119714668125165191168,
    (85, 3, 1): 178631527861898612572160,
    (85, 3, 2): 591749680193705672179712,
    (85, 3, 3): -2561612406821551603712,
    (85, 4, 0): 1987304899246417848041472,
    (85, 4, 1): -415955735384208760111104,
    (85, 4, 2): 48161796297012606402560,
    (85, 5, 0): 775196597198017825603584,
    (85, 5, 1): -7252495187868435611648,
    (85, 5, 2): -1979254210597295751168,
    (85, 6, 0): 5416244345786058407936,
    (86, 0, 0): -494597053583352291456450560,
    (86, 0, 1): -169228659244780350408228864,
    (86, 0, 2): 7694819482674981232443392,
    (86, 0, 3): -58563224287257095569408,
    (86, 0, 4): 76538675667161579520,
    (86, 0, 5): -11258999068426240,
    (86, 1, 0): -913283117418987237547180032,
    (86, 1, 1): -312196091264657984296321024,
    (86, 1, 2): 10970035780974769608851456,
    (86, 1, 3): -61844267752582341984256,
    (86, 1, 4): 53644626961423663104,
    (86, 1, 5): -3940649673949184,
    (86, 2, 0): -743062573736958973465067520,
    (86, 2, 1): -242401030711475688370601984,
    (86, 2, 2): 6870639906799730110234624,
    (86, 2, 3): -32207112532815310225408,
    (86, 2, 4): 26825550442944004096,
    (86, 2, 5): -2216615441596416,
    (86, 3, 0): -291645300320916451306242048,
    (86, 3, 1): -93993026418257422826078208,
    (86, 3, 2): 1890049713355204260265984,
    (86, 3, 3): -5150280768946670927872,
    (86, 4, 0): -53028359528147359167938560,
    (86, 4, 1): -17755463546473483903959040,
    (86, 4, 2): 184318825028024847564800,
    (86, 5, 0): -3371906565953437258743808,
    (86, 5, 1): -1296386504380509044342784,
    (86, 6, 0): 19011619681009424924672,
    (86, 6, 1): 6146489402277677236224,
    (87, 0, 0): 5872626343667584785912430592,
    (87, 0, 1): -619101360460494949457068032,
    (87, 0, 2): 14629273398003691602051072,
    (87, 0, 3): -82963943241132556681216,
    (87, 0, 4): 94845808152422645760,
    (87, 0, 5): -13510798882111488,
    (87, 1, 0): 10990971093686238068122583040,
    (87, 1, 1): -935967527813469105612128256,
    (87, 1, 2): 17349214435093561097584640,
    (87, 1, 3): -73022204279515726741504,
    (87, 1, 4): 55402156716004999168,
    (87, 1, 5): -3940649673949184,
    (87, 2, 0): 8796479605291290772266549248,
    (87, 2, 1): -581855760218182131589840896,
    (87, 2, 2): 7934884878625481307455488,
    (87, 2, 3): -22039445077498137673728,
    (87, 2, 4): 8322652111380676608,
    (87, 3, 0): 3877442551075066858889543680,
    (87, 3, 1): -193994998599196662684450816,
    (87, 3, 2): 1958521604842427055603712,
    (87, 3, 3): -4662201224189928538112,
    (87, 3, 4): 3695282659094691840,
    (87, 4, 0): 992894450113546997167292416,
    (87, 4, 1): -34821174176641773750714368,
    (87, 4, 2): 212035910181857626423296,
    (87, 5, 0): 139081526918499287080894464,
    (87, 5, 1): -2620250422097549371375616,
    (87, 6, 0): 8234488627252959899549696,
    (87, 7, 0): -3947697009258016014336,
    (88, 0, 0): -2378840169714272210302009344,
    (88, 0, 1): 355381099372544791851040768,
    (88, 0, 2): -11952134324074371795124224,
    (88, 0, 3): 126405737304342399025152,
    (88, 0, 4): -248670757024889307136,
    (88, 0, 5): 47287796087390208,
    (88, 1, 0): -4024296531796826348777897984,
    (88, 1, 1): 474882465870320592926801920,
    (88, 1, 2): -12344657159877686735142912,
    (88, 1, 3): 95690514557531324416000,
    (88, 1, 4): -124526781496607899648,
    (88, 1, 5): 11821949021847552,
    (88, 2, 0): -2805475869023356168012038144,
    (88, 2, 1): 251940281538872035858448384,
    (88, 2, 2): -4766094651825960291139584,
    (88, 2, 3): 24130383630843106033664,
    (88, 2, 4): -15588928635166261248,
    (88, 3, 0): -1028833176118511311781888000,
    (88, 3, 1): 66257487436892408003952640,
    (88, 3, 2): -813877780597350485458944,
    (88, 3, 3): 2025352069021618405376,
    (88, 4, 0): -198206875594179310017052672,
    (88, 4, 1): 7079814943897964624478208,
    (88, 4, 2): -430754280631106011136,
    (88, 4, 3): -426956461915651440640,
    (88, 5, 0): -15731277064855435301879808,
    (88, 5, 1): -59277086380938756096,
    (88, 6, 0): -2539573870521200148480,
    (89, 0, 0): 577927932540070050897330176,
    (89, 0, 1): -63036508996585459135021056,
    (89, 0, 2): -7555002385968299685969920,
    (89, 0, 3): 78896724403255752261632,
    (89, 0, 4): -80200102164213792768,
    (89, 1, 0): 866666230566479350546300928,
    (89, 1, 1): -69191199296137700365565952,
    (89, 1, 2): -15156259190067891655409664,
    (89, 1, 3): 140689058896735071371264,
    (89, 1, 4): -152581955375312404480,
    (89, 1, 5): 11821949021847552,
    (89, 2, 0): 359863711252874221827653632,
    (89, 2, 1): -10460534696549878358605824,
    (89, 2, 2): -8779065605571254769680384,
    (89, 2, 3): 55949484245268916338688,
    (89, 2, 4): -33179425829721997312,
    (89, 3, 0): 555043551009090668855296,
    (89, 3, 1): 7988575678742084586569728,
    (89, 3, 2): -2017313459783160916082688,
    (89, 3, 3): 6424706172129927757824,
    (89, 4, 0): -32053395154108793168592896,
    (89, 4, 1): 2818647060063946534813696,
    (89, 4, 2): -162744662467483749318656,
    (89, 5, 0): -5830588872910182262243328,
    (89, 5, 1): 29341976739368333737984,
    (89, 5, 2): 8222029546101732802560,
    (89, 6, 0): -27728409138436453171200,
    (90, 0, 0): 2145049972246844684707561472,
    (90, 0, 1): 754555654619791597296943104,
    (90, 0, 2): -26279895690193280776011776,
    (90, 0, 3): 147012479816932878450688,
    (90, 0, 4): -108806966997271183360,
    (90, 1, 0): 3936903133310284562425708544,
    (90, 1, 1): 1375024645156696326842351616,
    (90, 1, 2): -37284493261140795060125696,
    (90, 1, 3): 154865190314396698542080,
    (90, 1, 4): -76164876898089828352,
    (90, 2, 0): 3178289116487528159450759168,
    (90, 2, 1): 1061765937457022220608995328,
    (90, 2, 2): -23371543583561213074735104,
    (90, 2, 3): 81307045294324907507712,
    (90, 2, 4): -43826779773755981824,
    (90, 2, 5): 2955487255461888,
    (90, 3, 0): 1230223721833855243585060864,
    (90, 3, 1): 408356387606170139617132544,
    (90, 3, 2): -6416297375727824691789824,
    (90, 3, 3): 13030530232774094225408,
    (90, 4, 0): 218036705531962492866002944,
    (90, 4, 1): 76285296319883605717286912,
    (90, 4, 2): -622918835383658208034816,
    (90, 5, 0): 12850435937019863070932992,
    (90, 5, 1): 5500888537997329041457152,
    (90, 6, 0): -103584356975749686624256,
    (90, 6, 1): -33386100084815052144640,
    (91, 0, 0): -33424994968348040476154134528,
    (91, 0, 1): 2823375416212723392848068608,
    (91, 0, 2): -51849831541221702038978560,
    (91, 0, 3): 216105912666516610875392,
    (91, 0, 4): -129703669268270284800,
    (91, 1, 0): -61697911524332742607655403520,
    (91, 1, 1): 4233102999811007318274867200,
    (91, 1, 2): -61213849733431362773319680,
    (91, 1, 3): 189670161156220498477056,
    (91, 1, 4): -75660473739824332800,
    (91, 2, 0): -48733607899104303103908773888,
    (91, 2, 1): 2610196382189438957162332160,
    (91, 2, 2): -27872205506139375859138560,
    (91, 2, 3): 57080152901166972272640,
    (91, 2, 4): -11349071060973649920,
    (91, 3, 0): -21239002569739355929131876352,
    (91, 3, 1): 865008289627656298919100416,
    (91, 3, 2): -6875275043342892193021952,
    (91, 3, 3): 12201077378865831084032,
    (91, 3, 4): -6649846324789248000,
    (91, 4, 0): -5382589860348220218846216192,
    (91, 4, 1): 154357355417718746299498496,
    (91, 4, 2): -742432735781439999574016,
    (91, 5, 0): -746060257255490002003951616,
    (91, 5, 1): 11529021576565396248461312,
    (91, 6, 0): -43673754604575009844232192,
    (91, 7, 0): 27167956757013715746816,
    (92, 0, 0): 14931083898207586843759738880,
    (92, 0, 1): -1750850430089301050494287872,
    (92, 0, 2): 45074287102715962601766912,
    (92, 0, 3): -327897793439214921056256,
    (92, 0, 4): 321953330161462018048,
    (92, 1, 0): 24440602193456940672190775296,
    (92, 1, 1): -2292288951275577734342901760,
    (92, 1, 2): 46029479867122958899085312,
    (92, 1, 3): -247048164122343245873152,
    (92, 1, 4): 160976665080731009024,
    (92, 2, 0): 16558278937771771182339588096,
    (92, 2, 1): -1195321414549169897044180992,
    (92, 2, 2): 17595701428184335842803712,
    (92, 2, 3): -62023628111341999357952,
    (92, 2, 4): 20122083135091376128,
    (92, 3, 0): 5931612050473755921126260736,
    (92, 3, 1): -310044066687608096200589312,
    (92, 3, 2): 2980755746006363717763072,
    (92, 3, 3): -5186266517886384209920,
    (92, 4, 0): 1119175697749572155034566656,
    (92, 4, 1): -32580345171266403250995200,
    (92, 4, 2): -1405783424034957950976,
    (92, 4, 3): 1167848474465533952000,
    (92, 5, 0): 86977957309616343459299328,
    (92, 5, 1): 12871351489107102531584,
    (92, 6, 0): -4088149387513752977408,
    (93, 0, 0): -2275311729310320978282151936,
    (93, 0, 1): 187735318343241310647877632,
    (93, 0, 2): 23061750506070207239290880,
    (93, 0, 3): -171317218055549819551744,
    (93, 0, 4): 121056757983718932480,
    (93, 1, 0): -2646982207590410915978149888,
    (93, 1, 1): 101267120917402445284376576,
    (93, 1, 2): 47760507775365867561287680,
    (93, 1, 3): -316751420390269962420224,
    (93, 1, 4): 213425586341087805440,
    (93, 2, 0): -394598030164175788705841152,
    (93, 2, 1): -77078760953361122568699904,
    (93, 2, 2): 27731973690957408273170432,
    (93, 2, 3): -126796172370437656805376,
    (93, 2, 4): 45790349211289518080,
    (93, 3, 0): 533376705711839087129788416,
    (93, 3, 1): -65455791546509923402645504,
    (93, 3, 2): 6345977836190839481565184,
    (93, 3, 3): -14575690776601937575936,
    (93, 4, 0): 264312826433297881090752512,
    (93, 4, 1): -15470846124182252015321088,
    (93, 4, 2): 508949162098107508326400,
    (93, 5, 0): 37515079322406668803768320,
    (93, 5, 1): -105816123388509693149184,
    (93, 5, 2): -31252974726065713840128,
    (93, 6, 0): 127370950043117838925824,
    (94, 0, 0): -8580199888987378738830245888,
    (94, 0, 1): -3084390056453894423099473920,
    (94, 0, 2): 81933501199646113486864384,
    (94, 0, 3): -330058368338848152289280,
    (94, 0, 4): 181585136975578398720,
    (94, 1, 0): -15668465763221963364469047296,
    (94, 1, 1): -5567218593477500142637547520,
    (94, 1, 2): 115808690711859565581828096,
    (94, 1, 3): -347395137233997461979136,
    (94, 1, 4): 127109595882904879104,
    (94, 2, 0): -12517016344073679889665884160,
    (94, 2, 1): -4283779653899491758001094656,
    (94, 2, 2): 72746450720807678493327360,
    (94, 2, 3): -184439896721774518206464,
    (94, 2, 4): 65793086956255576064,
    (94, 3, 0): -4754084638248281270260858880,
    (94, 3, 1): -1638009101764933220082647040,
    (94, 3, 2): 19962642875275322377371648,
    (94, 3, 3): -29678353375102031101952,
    (94, 4, 0): -812035327140135768057446400,
    (94, 4, 1): -303412086036706035715014656,
    (94, 4, 2): 1932629543712114549456896,
    (94, 5, 0): -41949208462618928684728320,
    (94, 5, 1): -21664502626619365162745856,
    (94, 6, 0): 517117536367378190827520,
    (94, 6, 1): 166840094685768355676160,
    (95, 0, 0): 174785021621540430749712252928,
    (95, 0, 1): -11820206088151276580656644096,
    (95, 0, 2): 167481457433094876517367808,
    (95, 0, 3): -503300965307091406290944,
    (95, 0, 4): 246436971609713541120,
    (95, 1, 0): 319107402761292329374516772864,
    (95, 1, 1): -17607118164352530056648589312,
    (95, 1, 2): 197056626161996043527389184,
    (95, 1, 3): -441475261392173085491200,
    (95, 1, 4): 143754900105666232320,
    (95, 2, 0): 249419012911187899101401317376,
    (95, 2, 1): -10787617608600459268077912064,
    (95, 2, 2): 89423800910199936541261824,
    (95, 2, 3): -132777430057146176765952,
    (95, 2, 4): 21563235015849934848,
    (95, 3, 0): 107723754258068593672563195904,
    (95, 3, 1): -3558734327275340274040045568,
    (95, 3, 2): 22067696074644039688781824,
    (95, 3, 3): -28738078334100736835584,
    (95, 3, 4): 9812217688133468160,
    (95, 4, 0): 27075410453948242087672545280,
    (95, 4, 1): -632278572462506339676979200,
    (95, 4, 2): 2380740422869004159287296,
    (95, 5, 0): 3720873799107611921041326080,
    (95, 5, 1): -46954876782336799812878336,
    (95, 6, 0): 215794493350740635598979072,
    (95, 7, 0): -172255562670792087961600,
    (96, 0, 0): -84503461443880223826021187584,
    (96, 0, 1): 7809991360364305343766855680,
    (96, 0, 2): -153356785495855472844996608,
    (96, 0, 3): 765226284409693329686528,
    (96, 0, 4): -598366260890953580544,
    (96, 1, 0): -135177901390858428841918988288,
    (96, 1, 1): 10085013069964299460478500864,
    (96, 1, 2): -155462212412928468614905856,
    (96, 1, 3): 575902450064817622351872,
    (96, 1, 4): -299183130445476790272,
    (96, 2, 0): -89725853391622056567199760384,
    (96, 2, 1): 5196025474131826949608177664,
    (96, 2, 2): -59041754085519362527068160,
    (96, 2, 3): 144448454448281288704000,
    (96, 2, 4): -37397891305684598784,
    (96, 3, 0): -31590257414307725583413411840,
    (96, 3, 1): 1334392619771318781672947712,
    (96, 3, 2): -9948494901489840968171520,
    (96, 3, 3): 12071196239624744730624,
    (96, 4, 0): -5863838459000633223553220608,
    (96, 4, 1): 138338463927646671182233600,
    (96, 4, 2): 14956350216756034273280,
    (96, 4, 3): -2872142514857862758400,
    (96, 5, 0): -447708971394797707173298176,
    (96, 5, 1): -113626075585211350908928,
    (96, 6, 0): 125695509228531933511680,
    (97, 0, 0): 8193268068846971488600850432,
    (97, 0, 1): -508655538602855225257623552,
    (97, 0, 2): -63969619098809983093964800,
    (97, 0, 3): 329403508924231463206912,
    (97, 0, 4): -96845406386975145984,
    (97, 1, 0): 5144430662054010442555064320,
    (97, 1, 1): 206576137904754510201356288,
    (97, 1, 2): -137733387660221206031761408,
    (97, 1, 3): 638832652781149302554624,
    (97, 1, 4): -258254417031933722624,
    (97, 2, 0): -4314932701758211420418211840,
    (97, 2, 1): 700892329289175844196974592,
    (97, 2, 2): -80461474441282153594486784,
    (97, 2, 3): 258389813251130989215744,
    (97, 2, 4): -58510766358797484032,
    (97, 3, 0): -4889714803377346288814129152,
    (97, 3, 1): 365517598247443914310025216,
    (97, 3, 2): -18390813491634868727054336,
    (97, 3, 3): 29813748468399390851072,
    (97, 4, 0): -1713718589580121710102839296,
    (97, 4, 1): 73756429720638441346039808,
    (97, 4, 2): -1470043607275246549204992,
    (97, 5, 0): -214786461686841074448859136,
    (97, 5, 1): 332524916108315074756608,
    (97, 5, 2): 108609457413488199598080,
    (97, 6, 0): -516709164308392046493696,
    (98, 0, 0): 31654211429334546653212835840,
    (98, 0, 1): 11576220301447333491045826560,
    (98, 0, 2): -232682212231384235086184448,
    (98, 0, 3): 655228349498163273400320,
    (98, 0, 4): -138350580552821637120,
    (98, 1, 0): 57561491817463026162004393984,
    (98, 1, 1): 20738805903195716691460882432,
    (98, 1, 2): -327937963530278432818593792,
    (98, 1, 3): 688627332565119023448064,
    (98, 1, 4): -96845406386975145984,
    (98, 2, 0): 45288574994790912510872518656,
    (98, 2, 1): 15928097241804675303493074944,
    (98, 2, 2): -206691891367932225713602560,
    (98, 2, 3): 371386244794564321738752,
    (98, 2, 4): -73336616332101156864,
    (98, 3, 0): 16727305354912920319433900032,
    (98, 3, 1): 6067466032020323086259716096,
    (98, 3, 2): -56778729842396427982995456,
    (98, 3, 3): 60207110208841364537344,
    (98, 4, 0): 2694475270759230049506820096,
    (98, 4, 1): 1116912269513296447033835520,
    (98, 4, 2): -5489847503439980836945920,
    (98, 5, 0): 105607312944699746738503680,
    (98, 5, 1): 79147222736772027211841536,
    (98, 6, 0): -2365399741652497814519808,
    (98, 6, 1): -767931885639918380122112,
    (99, 0, 0): -842696098556485189950389616640,
    (99, 0, 1): 45483642784952371182940717056,
    (99, 0, 2): -492280732823504730479132672,
    (99, 0, 3): 1032279798364786508431360,
    (99, 0, 4): -172938225691027046400,
    (99, 1, 0): -1525060257691105679469547880448,
    (99, 1, 1): 67405682136259585399123345408,
    (99, 1, 2): -577702833839667600880041984,
    (99, 1, 3): 903995375468687252258816,
    (99, 1, 4): -100880631653099110400,
    (99, 2, 0): -1181962217788890486039545643008,
    (99, 2, 1): 41091100791070992585770139648,
    (99, 2, 2): -261482358013620688236052480,
    (99, 2, 3): 271431156908085376712704,
    (99, 2, 4): -15132094747964866560,
    (99, 3, 0): -506808721535903954544623616000,
    (99, 3, 1): 13509832454775536956320251904,
    (99, 3, 2): -64610320205004535867899904,
    (99, 3, 3): 59955115795291475804160,
    (99, 3, 4): -13082956917511290880,
    (99, 4, 0): -126540213106742918844132622336,
    (99, 4, 1): 2392749146232943932929474560,
    (99, 4, 2): -6973547763174870895034368,
    (99, 5, 0): -17269866185367121518078722048,
    (99, 5, 1): 176927558723005351295188992,
    (99, 6, 0): -993922417921448996866359296,
    (99, 7, 0): 1008763371084553801170944,
    (100, 0, 0): 435339627809416231642980155392,
    (100, 0, 1): -31725424715896220903035371520,
    (100, 0, 2): 471884241688180374095527936,
    (100, 0, 3): -1573359695534835076431872,
    (100, 0, 4): 396604997584755359744,
    (100, 1, 0): 685004520565955173118837260288,
    (100, 1, 1): -40577181167369584114537594880,
    (100, 1, 2): 476003554131321334288875520,
    (100, 1, 3): -1181312196657790582784000,
    (100, 1, 4): 198302498792377679872,
    (100, 2, 0): 447924926945756443167659393024,
    (100, 2, 1): -20728809687522071284885225472,
    (100, 2, 2): 179964094175995281362911232,
    (100, 2, 3): -295631555750535398162432,
    (100, 2, 4): 24787812349047209984,
    (100, 3, 0): 155668641018385807614540775424,
    (100, 3, 1): -5284758977990892720259858432,
    (100, 3, 2): 30208633811502431060623360,
    (100, 3, 3): -24656379297522029428736,
    (100, 4, 0): 28523609604450320694563045376,
    (100, 4, 1): -541779401227138542801518592,
    (100, 4, 2): -79435210803501187727360,
    (100, 4, 3): 6308980127992643584000,
    (100, 5, 0): 2145199504661789917218603008,
    (100, 5, 1): 707087218142541242171392,
    (100, 6, 0): -1170127454065920334364672,
    (101, 0, 0): -26982317599433812207560818688,
    (101, 0, 1): 1247838119433475051267031040,
    (101, 0, 2): 160689735200036493803388928,
    (101, 0, 3): -556206227310490400325632,
    (101, 0, 4): 110680464442257309696,
    (101, 1, 0): 6276557723915630926014447616,
    (101, 1, 1): -2545726267705760147895746560,
    (101, 1, 2): 362914039452600934913277952,
    (101, 1, 3): -1139812787099467125882880,
    (101, 1, 4): 217325703618390654976,
    (101, 2, 0): 44165064028351407495623737344,
    (101, 2, 1): -3792251545045645841049583616,
    (101, 2, 2): 214018474495449619587137536,
    (101, 2, 3): -466190727916806215827456,
    (101, 2, 4): 47413896876956581888,
    (101, 3, 0): 31478364645553499582253498368,
    (101, 3, 1): -1685494203826115458610757632,
    (101, 3, 2): 48981917681233958807797760,
    (101, 3, 3): -53997294841043791904768,
    (101, 4, 0): 9571269591051516704085508096,
    (101, 4, 1): -313971237515714524906258432,
    (101, 4, 2): 3910173166752421512216576,
    (101, 5, 0): 1114716028122227074534473728,
    (101, 5, 1): -862028809772816467492864,
    (101, 5, 2): -344435984048438894395392,
    (101, 6, 0): 1784072453071983343566848,
    (102, 0, 0): -107613740758815830615644962816,
    (102, 0, 1): -39903203422679379955335299072,
    (102, 0, 2): 599438311869541284845715456,
    (102, 0, 3): -1147756416266208301547520,
    (102, 0, 4): 184467440737095516160,
    (102, 1, 0): -194996691728937286752471613440,
    (102, 1, 1): -71066651105636067456755695616,
    (102, 1, 2): 843029264463330695213744128,
    (102, 1, 3): -1205992787306909355999232,
    (102, 1, 4): 129127208515966861312,
    (102, 2, 0): -149890100026222500339584598016,
    (102, 2, 1): -54560420032769196622474117120,
    (102, 2, 2): 533977423392167483393703936,
    (102, 2, 3): -661495630797206093561856,
    (102, 2, 4): 70039981404865953792,
    (102, 3, 0): -52963327791632637973881683968,
    (102, 3, 1): -20742105005086741377033699328,
    (102, 3, 2): 147079179208278146065367040,
    (102, 3, 3): -108070033983045294358528,
    (102, 4, 0): -7686381635258546258112937984,
    (102, 4, 1): -3802059587140319999361548288,
    (102, 4, 2): 14223926697369427995787264,
    (102, 5, 0): -113627246996244227925475328,
    (102, 5, 1): -267912530836248203303583744,
    (102, 6, 0): 9896658276124022582280192,
    (102, 6, 1): 3256943956684598700670976,
    (103, 0, 0): 3754611088398667834995721109504,
    (103, 0, 1): -160879994623264828939403526144,
    (103, 0, 2): 1311303183188380930705195008,
    (103, 0, 3): -1883043635044271028961280,
    (103, 0, 4): 276701161105643274240,
    (103, 1, 0): 6746935389910225112735508594688,
    (103, 1, 1): -237459777902669821371496792064,
    (103, 1, 2): 1535969750164160228037230592,
    (103, 1, 3): -1648871442400565125971968,
    (103, 1, 4): 161409010644958576640,
    (103, 2, 0): 5193347083645767648905158197248,
    (103, 2, 1): -144183259485296795928426971136,
    (103, 2, 2): 693932118098627900334931968,
    (103, 2, 3): -495032212276051099779072,
    (103, 2, 4): 24211351596743786496,
    (103, 3, 0): 2213936304527389479848669872128,
    (103, 3, 1): -47288560145188672774290276352,
    (103, 3, 2): 171872668686929228239732736,
    (103, 3, 3): -111145884442148286234624,
    (103, 3, 4): 11349071060973649920,
    (103, 4, 0): 549850402504873133147626143744,
    (103, 4, 1): -8357584988559200590183268352,
    (103, 4, 2): 18588290624730737470865408,
    (103, 5, 0): 74623180244538714234875281408,
    (103, 5, 1): -616080371284799914638311424,
    (103, 6, 0): 4267853447941035947611652096,
    (103, 7, 0): -5466450523408630644998144,
    (104, 0, 0): -2053839239240015046391623581696,
    (104, 0, 1): 117710840319964665311437783040,
    (104, 0, 2): -1309727093374723186615123968,
    (104, 0, 3): 2917241894792723330760704,
    (104, 0, 4): -645636042579834306560,
    (104, 1, 0): -3192905124017617633885657497600,
    (104, 1, 1): 149537524194702377844872314880,
    (104, 1, 2): -1317037796305551313854267392,
    (104, 1, 3): 2189951339570613693972480,
    (104, 1, 4): -322818021289917153280,
    (104, 2, 0): -2064749573770043071652918460416,
    (104, 2, 1): 75922392879267670030695792640,
    (104, 2, 2): -496508357630317485518487552,
    (104, 2, 3): 547978979453615940304896,
    (104, 2, 4): -40352252661239644160,
    (104, 3, 0): -710528477630678712218757890048,
    (104, 3, 1): 19252164582135691138545221632,
    (104, 3, 2): -83141106924137967821783040,
    (104, 3, 3): 45701231981863110705152,
    (104, 4, 0): -128848342539804521238695510016,
    (104, 4, 1): 1954948932258723260637642752,
    (104, 4, 2): 326012874865573783142400,
    (104, 4, 3): -12239342635312249569280,
    (104, 5, 0): -9565153046673153855183650816,
    (104, 5, 1): -3653395353937513008857088,
    (104, 6, 0): 8122675138218045558751232,
    (105, 0, 0): 81141892086714295577103826944,
    (105, 0, 1): -2752724091262510630805962752,
    (105, 0, 2): -363678887578757117197156352,
    (105, 0, 3): 792176977501382984597504,
    (105, 1, 0): -132679779298194745589936160768,
    (105, 1, 1): 13613561837976612506756448256,
    (105, 1, 2): -870492481892364296306819072,
    (105, 1, 3): 1783080728908838968754176,
    (105, 1, 4): -161409010644958576640,
    (105, 2, 0): -278377397444326960095154929664,
    (105, 2, 1): 16459073070376626255900442624,
    (105, 2, 2): -519867299018473208916475904,
    (105, 2, 3): 743565195181139888701440,
    (105, 2, 4): -40352252661239644160,
    (105, 3, 0): -168921806327083906660585963520,
    (105, 3, 1): 6786440810326243190239133696,
    (105, 3, 2): -119408452625777129315893248,
    (105, 3, 3): 86824789129684735492096,
    (105, 4, 0): -47675137808018991131748466688,
    (105, 4, 1): 1208635030905658740368736256,
    (105, 4, 2): -9537779783998962164301824,
    (105, 5, 0): -5295788187986005393437360128,
    (105, 5, 1): 1534004179543125070446592,
    (105, 5, 2): 993874469836857639174144,
    (105, 6, 0): -4717707590119923728252928,
    (106, 0, 0): 336540769664320469654705274880,
    (106, 0, 1): 126212308914949641325265289216,
    (106, 0, 2): -1393825356884907263403229184,
    (106, 0, 3): 1682343059522311107379200,
    (106, 1, 0): 607973384824418361254883622912,
    (106, 1, 1): 223743423575590822348991758336,
    (106, 1, 2): -1956951621980232770083880960,
    (106, 1, 3): 1766460212498426662748160,
    (106, 2, 0): 450295465098348424154700578816,
    (106, 2, 1): 171952356378895327042396487680,
    (106, 2, 2): -1247802143670845299213991936,
    (106, 2, 3): 1004051668245992467070976,
    (106, 2, 4): -40352252661239644160,
    (106, 3, 0): 147438317019363103936396394496,
    (106, 3, 1): 65349522527310079076950081536,
    (106, 3, 2): -345197882136695163909570560,
    (106, 3, 3): 167016244382613976907776,
    (106, 4, 0): 17116361063414223458722119680,
    (106, 4, 1): 11949278227948036648226258944,
    (106, 4, 2): -33440051572101726695587840,
    (106, 5, 0): -808235103413534089076015104,
    (106, 5, 1): 838765957888871862867329024,
    (106, 6, 0): -37716459469157350749765632,
    (106, 6, 1): -12724183336739550057725952,
    (107, 0, 0): -15478783962890808295644200960000,
    (107, 0, 1): 522527962382933095037376921600,
    (107, 0, 2): -3151716835400166954911137792,
    (107, 0, 3): 2833419889721787128217600,
    (107, 1, 0): -27656171932196429781037341474816,
    (107, 1, 1): 768814025901746101185251639296,
    (107, 1, 2): -3686151772633007573390327808,
    (107, 1, 3): 2479242403506563737190400,
    (107, 2, 0): -21169766346457738485228762038272,
    (107, 2, 1): 465359401561931151651140272128,
    (107, 2, 2): -1662870713371591452112453632,
    (107, 2, 3): 743772721051969121157120,
    (107, 3, 0): -8982736378652856691237092065280,
    (107, 3, 1): 152374020466380081588722466816,
    (107, 3, 2): -413224822242264901641830400,
    (107, 3, 3): 175094188904641850245120,
    (107, 3, 4): -10088063165309911040,
    (107, 4, 0): -2221534281367806793230044889088,
    (107, 4, 1): 26896990413833437600444055552,
    (107, 4, 2): -44849543213906555341635584,
    (107, 5, 0): -300147854627846923110901088256,
    (107, 5, 1): 1978753077960820213929738240,
    (107, 6, 0): -17078833461665856750088093696,
    (107, 7, 0): 27444324947942171987673088,
    (108, 0, 0): 8906591726396034396563292815360,
    (108, 0, 1): -399213902004782075329822851072,
    (108, 0, 2): 3272288296440794736507224064,
    (108, 0, 3): -4401245562034509339164672,
    (108, 1, 0): 13722352348485921581235775209472,
    (108, 1, 1): -504705732387117122522307362816,
    (108, 1, 2): 3282921590020691280764338176,
    (108, 1, 3): -3300934171525882004373504,
    (108, 2, 0): 8799775162862955544938144595968,
    (108, 2, 1): -255102903627227200538024083456,
    (108, 2, 2): 1234924144203281352886321152,
    (108, 2, 3): -825233542881470501093376,
    (108, 3, 0): 3005386933444430802989267025920,
    (108, 3, 1): -64429284401691178998165405696,
    (108, 3, 2): 206393720358452605659119616,
    (108, 3, 3): -68769461906789208424448,
    (108, 4, 0): 540444157505904687670613770240,
    (108, 4, 1): -6487653514726786077953097728,
    (108, 4, 2): -1130502369489014533128192,
    (108, 4, 3): 20725925773129212231680,
    (108, 5, 0): 39664689656231953479585759232,
    (108, 5, 1): 16486310726783734059630592,
    (108, 6, 0): -47704787475364985855541248,
    (109, 0, 0): -222147372909105798627308077056,
    (109, 0, 1): 5409338579865658242222784512,
    (109, 0, 2): 735621916502536113518280704,
    (109, 0, 3): -963362762505407623593984,
    (109, 1, 0): 881118587440178102605212286976,
    (109, 1, 1): -55770000922783077829315657728,
    (109, 1, 2): 1892046679169909417884778496,
    (109, 1, 3): -2354911348449761359298560,
    (109, 2, 0): 1420613403705933447890519195648,
    (109, 2, 1): -61612900264588903377960697856,
    (109, 2, 2): 1147738264670039771348729856,
    (109, 2, 3): -996825156255116750225408,
    (109, 3, 0): 796851760017618685664100876288,
    (109, 3, 1): -24400343083018215205984272384,
    (109, 3, 2): 265035781418194717424746496,
    (109, 3, 3): -117076872949816096718848,
    (109, 4, 0): 215297301060444846355940114432,
    (109, 4, 1): -4231666165621283512196792320,
    (109, 4, 2): 21209881868510505352560640,
    (109, 5, 0): 23153822797828444460477841408,
    (109, 5, 1): 302622151178530938945536,
    (109, 5, 2): -2598150404036071658618880,
    (109, 6, 0): 5217536901611061059256320,
    (110, 0, 0): -965457830950799775953749803008,
    (110, 0, 1): -365571914296546174656099385344,
    (110, 0, 2): 2900099704459906518634987520,
    (110, 0, 3): -2148676749705688572231680,
    (110, 1, 0): -1739580667760759542629384847360,
    (110, 1, 1): -645724171383137619878977994752,
    (110, 1, 2): 4067267998449760855539056640,
    (110, 1, 3): -2256110587190973000843264,
    (110, 2, 0): -1210919534269382737305542852608,
    (110, 2, 1): -497479917166658557833923002368,
    (110, 2, 2): 2617300123550471161468944384,
    (110, 2, 3): -1313223710607382979543040,
    (110, 3, 0): -342048520443227747637388115968,
    (110, 3, 1): -189314917779086286496110477312,
    (110, 3, 2): 728799129952457603919380480,
    (110, 3, 3): -220872090166561316274176,
    (110, 4, 0): -18258217869660894082036137984,
    (110, 4, 1): -34589969303443174185964142592,
    (110, 4, 2): 70835460349556530786336768,
    (110, 5, 0): 7522241000775193651291619328,
    (110, 5, 1): -2422590084355431241713975296,
    (110, 6, 0): 129868500149940916498464768,
    (110, 6, 1): 45743045022099484243394560,
    (111, 0, 0): 59067525590570809537106502746112,
    (111, 0, 1): -1555130742280948989983482445824,
    (111, 0, 2): 6775802545348818781257859072,
    (111, 0, 3): -3825116851124412623093760,
    (111, 1, 0): 105048618810439377888622206255104,
    (111, 1, 1): -2282442344500176966421718237184,
    (111, 1, 2): 7917448809682004120604508160,
    (111, 1, 3): -3346977244733861045207040,
    (111, 2, 0): 80047851428669166324646787678208,
    (111, 2, 1): -1378167977744000807995248214016,
    (111, 2, 2): 3568392185685023486166171648,
    (111, 2, 3): -1004093173420158313562112,
    (111, 3, 0): 33839495264810053345254242779136,
    (111, 3, 1): -450818570192945144956253634560,
    (111, 3, 2): 891087690578222688835207168,
    (111, 3, 3): -240093597491366669058048,
    (111, 4, 0): 8341144820092038337243820064768,
    (111, 4, 1): -79546969710718854281717350400,
    (111, 4, 2): 97253448365885601265745920,
    (111, 5, 0): 1122985337606652239086838874112,
    (111, 5, 1): -5846309355033823789048659968,
    (111, 6, 0): 63639995570381037726204952576,
    (111, 7, 0): -127734403605870456302731264,
    (112, 0, 0): -35575998220235713676318213144576,
    (112, 0, 1): 1236573953109215743931706245120,
    (112, 0, 2): -7296774015738998041232801792,
    (112, 0, 3): 6176855359593495939514368,
    (112, 1, 0): -54442177411730993534279889190912,
    (112, 1, 1): 1557868730227601705886399070208,
    (112, 1, 2): -7311292931490580765442310144,
    (112, 1, 3): 4632641519695121954635776,
    (112, 2, 0): -34690415884351917043184610312192,
    (112, 2, 1): 784841448204510696095413698560,
    (112, 2, 2): -2747017406515867843918036992,
    (112, 2, 3): 1158160379923780488658944,
    (112, 3, 0): -11778692710054257724229496602624,
    (112, 3, 1): 197627044989955243677178658816,
    (112, 3, 2): -458642726070213888916324352,
    (112, 3, 3): 96513364993648374054912,
    (112, 4, 0): -2103603581619361608998733217792,
    (112, 4, 1): 19746278414034660571442315264,
    (112, 4, 2): 3397433701461475096264704,
    (112, 4, 3): -29699257958672378101760,
    (112, 5, 0): -152813928808296244572984442880,
    (112, 5, 1): -66353955309900320401784832,
    (112, 6, 0): 247565353756555583661539328,
    (113, 0, 0): 551096088426246397064858566656,
    (113, 0, 1): -9342578733981854262129328128,
    (113, 0, 2): -1315537965331894285050576896,
    (113, 0, 3): 831136500985057557610496,
    (113, 1, 0): -4376872167744568174021514887168,
    (113, 1, 1): 193710542821115721345702821888,
    (113, 1, 2): -3697379198946030154885890048,
    (113, 1, 3): 2620913397992653093601280,
    (113, 2, 0): -6298325681773431232967485685760,
    (113, 2, 1): 204402047832054979001954861056,
    (113, 2, 2): -2285129234080301791328600064,
    (113, 2, 3): 1154618605061628254748672,
    (113, 3, 0): -3380541019427816038099322929152,
    (113, 3, 1): 79101609143055487278549827584,
    (113, 3, 2): -531470914395076967725531136,
    (113, 3, 3): 137834071718757769674752,
    (113, 4, 0): -888942075323950449394999885824,
    (113, 4, 1): 13499100934697377308971368448,
    (113, 4, 2): -42673332681058222201634816,
    (113, 5, 0): -93413477066569963196980920320,
    (113, 5, 1): -18611998077572374027304960,
    (113, 5, 2): 6116307957396810460299264,
    (113, 6, 0): 40388521265931566352171008,
    (114, 0, 0): 2530581554056683290695353499648,
    (114, 0, 1): 966453985826162230393707692032,
    (114, 0, 2): -5343452122696660952201297920,
    (114, 0, 3): 1888946593147858085478400,
    (114, 1, 0): 4549142940059864528354067611648,
    (114, 1, 1): 1702297475764074587665415012352,
    (114, 1, 2): -7487123163930507700506460160,
    (114, 1, 3): 1983393922805250989752320,
    (114, 2, 0): 2836307189451895216562883264512,
    (114, 2, 1): 1316799374352007906744776785920,
    (114, 2, 2): -4877309098060029349274320896,
    (114, 2, 3): 1297912913026204051701760,
    (114, 3, 0): 556509113993743555782581944320,
    (114, 3, 1): 502632531745167613592762056704,
    (114, 3, 2): -1370490078057712090932576256,
    (114, 3, 3): 230030898599158108651520,
    (114, 4, 0): -81654786539531336667646394368,
    (114, 4, 1): 91918403420587509736531820544,
    (114, 4, 2): -133898827805513311028510720,
    (114, 5, 0): -41570981062208298516725366784,
    (114, 5, 1): 6433282709635277062743785472,
    (114, 6, 0): -397779900690769040864444416,
    (114, 6, 1): -151038239597504020653015040,
    (115, 0, 0): -208546512553739602228327305183232,
    (115, 0, 1): 4226849550074361778309083168768,
    (115, 0, 2): -12902260809837129867051663360,
    (115, 0, 3): 3400103867666144553861120,
    (115, 1, 0): -369500293322162768389137273716736,
    (115, 1, 1): 6191767478467908321862949535744,
    (115, 1, 2): -15063555722785046131294339072,
    (115, 1, 3): 2975090884207876484628480,
    (115, 2, 0): -280529732150621047796563898793984,
    (115, 2, 1): 3731566539702807290797826768896,
    (115, 2, 2): -6783497641532654868133576704,
    (115, 2, 3): 892527265262362945388544,
    (115, 3, 0): -118242280921784436644090040287232,
    (115, 3, 1): 1220227872157014971897962561536,
    (115, 3, 2): -1705060888931871073738162176,
    (115, 3, 3): 249141725459521204125696,
    (115, 4, 0): -29071462854333477466173289267200,
    (115, 4, 1): 215400099397165104237616562176,
    (115, 4, 2): -187574352054454121100476416,
    (115, 5, 0): -3903386565217919997804227330048,
    (115, 5, 1): 15830688063143015684675469312,
    (115, 6, 0): -220507588706382510319080570880,
    (115, 7, 0): 551188691881623943211122688,
    (116, 0, 0): 130985352359251712179335797407744,
    (116, 0, 1): -3489685270899588575706847641600,
    (116, 0, 2): 14400119900339655414512615424,
    (116, 0, 3): -5440166188265831286177792,
    (116, 1, 0): 199419761570723750153771670306816,
    (116, 1, 1): -4385269796222961329406738432000,
    (116, 1, 2): 14412549168922568320715063296,
    (116, 1, 3): -4080124641199373464633344,
    (116, 2, 0): 126449978989829928619888728866816,
    (116, 2, 1): -2203951114359114161268239368192,
    (116, 2, 2): 5409239410169517979673296896,
    (116, 2, 3): -1020031160299843366158336,
    (116, 3, 0): 42739514897678858376101213765632,
    (116, 3, 1): -553723386463723889918788763648,
    (116, 3, 2): 902231728384660066302689280,
    (116, 3, 3): -85002596691653613846528,
    (116, 4, 0): 7589719592034867723170209595392,
    (116, 4, 1): -54910898198551584758558621696,
    (116, 4, 2): -9000240220539185071652864,
    (116, 4, 3): 35509982341890886860800,
    (116, 5, 0): 546144343561455713070480359424,
    (116, 5, 1): 240414128116391446226927616,
    (116, 6, 0): -1157621015573809295079243776,
    (117, 0, 0): -1230435027797212656982548283392,
    (117, 0, 1): 13907482628846694025819848704,
    (117, 0, 2): 2045502486787952563602849792,
    (117, 0, 3): -604462909807314587353088,
    (117, 1, 0): 18397120804465715713822733369344,
    (117, 1, 1): -590393884465821888503798038528,
    (117, 1, 2): 6429511411159987697737531392,
    (117, 1, 3): -2101453084876992120094720,
    (117, 2, 0): 24948088402582163855447846551552,
    (117, 2, 1): -607614461359887853870416658432,
    (117, 2, 2): 4059476093753025940936458240,
    (117, 2, 3): -937389746849624574918656,
    (117, 3, 0): 13040822437670437431485908647936,
    (117, 3, 1): -231969639005092964993542914048,
    (117, 3, 2): 952002519635054333326786560,
    (117, 3, 3): -112451351873333426651136,
    (117, 4, 0): 3369931724914385437379184820224,
    (117, 4, 1): -39198504152202484637381951488,
    (117, 4, 2): 76748195227502653365813248,
    (117, 5, 0): 348081748475785905101414072320,
    (117, 5, 1): 107340838225036821907111936,
    (117, 5, 2): -12858164605998690132295680,
    (117, 6, 0): -387551616906225835881529344,
    (118, 0, 0): -6027220566270695213415111065600,
    (118, 0, 1): -2320837760056823587400530788352,
    (118, 0, 2): 8574306375616757421603553280,
    (118, 0, 3): -1511157274518286468382720,
    (118, 1, 0): -10812278617599551155881142910976,
    (118, 1, 1): -4079111410246808953556293386240,
    (118, 1, 2): 12009015744869370735590637568,
    (118, 1, 3): -1586715138244200791801856,
    (118, 2, 0): -5425478041788968445362405638144,
    (118, 2, 1): -3173967048997043444696571969536,
    (118, 2, 2): 7957744762880330803212976128,
    (118, 2, 3): -1050726542438496060047360,
    (118, 3, 0): 16410124358275876855044112384,
    (118, 3, 1): -1217531848487094608969502556160,
    (118, 3, 2): 2264482162373480164395843584,
    (118, 3, 3): -187123771883709691592704,
    (118, 4, 0): 704502726764469904036964859904,
    (118, 4, 1): -223235499118349096380683780096,
    (118, 4, 2): 222905437872318172729704448,
    (118, 5, 0): 184964400892381686939856666624,
    (118, 5, 1): -15637018067519752573936467968,
    (118, 6, 0): 1049149604074610925317914624,
    (118, 6, 1): 456776830989629140129284096,
    (119, 0, 0): 680365501148543661510649815498752,
    (119, 0, 1): -10441695403549247439638592749568,
    (119, 0, 2): 21416120894473155829919907840,
    (119, 0, 3): -3022314549036572936765440,
    (119, 1, 0): 1201819591046411646249629099491328,
    (119, 1, 1): -15273229852434550541582969339904,
    (119, 1, 2): 24995296899169717330284380160,
    (119, 1, 3): -2644525230407001319669760,
    (119, 2, 0): 909730316849948071694460006694912,
    (119, 2, 1): -9191285143318814812973727481856,
    (119, 2, 2): 11252303739654338786547990528,
    (119, 2, 3): -793357569122100395900928,
    (119, 3, 0): 382571113015645229963381684830208,
    (119, 3, 1): -3006388046952174223146375708672,
    (119, 3, 2): 2854716581967908510720065536,
    (119, 3, 3): -214572527065389504397312,
    (119, 4, 0): 93883939284507291316591481847808,
    (119, 4, 1): -531383373821548676856735072256,
    (119, 4, 2): 317569996387923080683454464,
    (119, 5, 0): 12580956613220924058641209753600,
    (119, 5, 1): -39093002943200314611074072576,
    (119, 6, 0): 709046762116018573216845922304,
    (119, 7, 0): -2203971426539405696735117312,
    (120, 0, 0): -444354244311349750844078493270016,
    (120, 0, 1): 8935103032925825811019563270144,
    (120, 0, 2): -24778143598821439564777783296,
    (120, 0, 3): 5289050460814002639339520,
    (120, 1, 0): -673857494712821142021998876033024,
    (120, 1, 1): 11207671558435713743875660054528,
    (120, 1, 2): -24790232857017585856524845056,
    (120, 1, 3): 3966787845610501979504640,
    (120, 2, 0): -425679209708178721691299915759616,
    (120, 2, 1): 5622884634462865269057866694656,
    (120, 2, 2): -9300814124807355119859400704,
    (120, 2, 3): 991696961402625494876160,
    (120, 3, 0): -143367575140547132731964038053888,
    (120, 3, 1): 1410361639263773002830157185024,
    (120, 3, 2): -1550844042440322966758621184,
    (120, 3, 3): 82641413450218791239680,
    (120, 4, 0): -25337876607480499087890133811200,
    (120, 4, 1): 138776220135282600955281932288,
    (120, 4, 2): 20648252298442344344059904,
    (120, 4, 3): -30990530043832046714880,
    (120, 5, 0): -1806790436353041388140972998656,
    (120, 5, 1): -786665606880992634442088448,
    (120, 6, 0): 4925014518056954800061284352,
    (121, 0, 0): 2448954882716303528819192496128,
    (121, 0, 1): -17331160549995323848587739136,
    (121, 0, 2): -2695904577740623059594772480,
    (121, 1, 0): -68209867825429708443428191207424,
    (121, 1, 1): 1599338288305434394158197374976,
    (121, 1, 2): -9804312839210916692543668224,
    (121, 1, 3): 1322262615203500659834880,
    (121, 2, 0): -89434620069456100852108546277376,
    (121, 2, 1): 1623353146364896647227795046400,
    (121, 2, 2): -6345613848225325580871008256,
    (121, 2, 3): 661131307601750329917440,
    (121, 3, 0): -45984693084560826364931749183488,
    (121, 3, 1): 614801756753454484926660345856,
    (121, 3, 2): -1502963968670507633936957440,
    (121, 3, 3): 82641413450218791239680,
    (121, 4, 0): -11747975443288731791687141031936,
    (121, 4, 1): 103269633470040802548743405568,
    (121, 4, 2): -121796915142932454529040384,
    (121, 5, 0): -1197363315279057383509976940544,
    (121, 5, 1): -438018897260925136018604032,
    (121, 5, 2): 23857284790993005362282496,
    (121, 6, 0): 2214149630872553294105935872,
    (122, 0, 0): 12947614870885792295169940258816,
    (122, 0, 1): 5028860610213263689842557976576,
    (122, 0, 2): -11678223417477317827661660160,
    (122, 1, 0): 23181203365994938239416262459392,
    (122, 1, 1): 8824517752502397221892490526720,
    (122, 1, 2): -16349512784468244958726324224,
    (122, 2, 0): 6744905272598290444296659140608,
    (122, 2, 1): 6922467083490690089389186351104,
    (122, 2, 2): -11108196004063088693206843392,
    (122, 2, 3): 330565653800875164958720,
    (122, 3, 0): -4988046670080164001589890121728,
    (122, 3, 1): 2674524261828823021414862815232,
    (122, 3, 2): -3219331678701894535080837120,
    (122, 3, 3): 82641413450218791239680,
    (122, 4, 0): -3391250204978867159707255046144,
    (122, 4, 1): 492571411008808047185793908736,
    (122, 4, 2): -320412565862705427749273600,
    (122, 5, 0): -713222354523864009050729480192,
    (122, 5, 1): 34586036582122181807099084800,
    (122, 6, 0): -2192273710862517431682727936,
    (122, 6, 1): -1260328557419736378342637568,
    (123, 0, 0): -2046569281616806740054744112300032,
    (123, 0, 1): 23289984929095501801814673588224,
    (123, 0, 2): -30174788457581144200666152960,
    (123, 1, 0): -3606359598773554591412588319342592,
    (123, 1, 1): 34029005966572410369938852675584,
    (123, 1, 2): -35203919867178001567443845120,
    (123, 2, 0): -2723357915808969304006753144274944,
    (123, 2, 1): 20455917055134401232359431077888,
    (123, 2, 2): -15841763940230100705349730304,
    (123, 3, 0): -1143290940796498587795439063400448,
    (123, 3, 1): 6697090773609456239368432779264,
    (123, 3, 2): -4075491999679678342678708224,
    (123, 3, 3): 82641413450218791239680,
    (123, 4, 0): -280210694520649295797497173639168,
    (123, 4, 1): 1186382387199281584344955617280,
    (123, 4, 2): -461127281136013681004380160,
    (123, 5, 0): -37501654112709876258821520752640,
    (123, 5, 1): 87464906459840038112099041280,
    (123, 6, 0): -2110167264796352424614024970240,
    (123, 7, 0): 8157053697582626002511593472,
    (124, 0, 0): 1386819660169997248279592499675136,
    (124, 0, 1): -20632746634769433041743703441408,
    (124, 0, 2): 36151717709755870840413487104,
    (124, 1, 0): 2096773458757549130480866562146304,
    (124, 1, 1): -25846386720807514342423401594880,
    (124, 1, 2): 36151717709755870840413487104,
    (124, 2, 0): 1320698698592825661527369340420096,
    (124, 2, 1): -12950541680295079312401903910912,
    (124, 2, 2): 13556894141158451565155057664,
    (124, 3, 0): 443577393113137213691271709720576,
    (124, 3, 1): -3244341180479444724303924297728,
    (124, 3, 2): 2259482356859741927525842944,
    (124, 4, 0): 78074303860751331619320937578496,
    (124, 4, 1): -316497289590690067859759955968,
    (124, 4, 2): -42047951163471320982749184,
    (124, 4, 3): 20660353362554697809920,
    (124, 5, 0): 5517027879668791607879259914240,
    (124, 5, 1): 2323456845898987369941434368,
    (124, 6, 0): -19153313106165758134105145344,
    (125, 0, 0): -4286986356045271891975667187712,
    (125, 0, 1): 17176418045084651314225348608,
    (125, 0, 2): 2901421967075110019294822400,
    (125, 1, 0): 227038166937164153977624141496320,
    (125, 1, 1): -3863099486987974849819265990656,
    (125, 1, 2): 12757189711483374366086922240,
    (125, 2, 0): 291830755988039907734163455737856,
    (125, 2, 1): -3891260205030078021814871654400,
    (125, 2, 2): 8479859045959364517329633280,
    (125, 3, 0): 148489373283184818106069954854912,
    (125, 3, 1): -1466779421068962853323018338304,
    (125, 3, 2): 2029295325018743941229445120,
    (125, 4, 0): 37648939167446413396899105079296,
    (125, 4, 1): -245487272571904459045802606592,
    (125, 4, 2): 165330050565266278931496960,
    (125, 5, 0): 3795777783405079782158795538432,
    (125, 5, 1): 1472098581338471632820240384,
    (125, 5, 2): -38422059148342971517108224,
    (125, 6, 0): -10156436981449807325961388032,
    (126, 0, 0): -24833077188064728314476431933440,
    (126, 0, 1): -9741350169136657383181208518656,
    (126, 0, 2): 13056398851837995086826700800,
    (126, 1, 0): -44375237333849969002167597531136,
    (126, 1, 1): -17074113906525582934945013170176,
    (126, 1, 2): 18278958392573193121557381120,
    (126, 2, 0): 3984740394031779222749026713600,
    (126, 2, 1): -13543652776656212531804500918272,
    (126, 2, 2): 12879593450719355570025922560,
    (126, 3, 0): 26614578685605606810109058482176,
    (126, 3, 1): -5284755374050503039624759214080,
    (126, 3, 2): 3828516954992078767647621120,
    (126, 4, 0): 12952541999179359168200102117376,
    (126, 4, 1): -979763163511095271849533112320,
    (126, 4, 2): 386761814947023943001702400,
    (126, 5, 0): 2450553942120533950863582953472,
    (126, 5, 1): -69076538509704289974113796096,
    (126, 6, 0): 2524199332423482759624785920,
    (126, 6, 1): 3155947485473007798316957696,
    (127, 0, 0): 5658289675762866183889674064363520,
    (127, 0, 1): -46472888044792818209850572931072,
    (127, 0, 2): 35107205801608831233467351040,
    (127, 1, 0): 9951522831988877015405016595300352,
    (127, 1, 1): -67848060203903987320364833177600,
    (127, 1, 2): 40958406768543636439045242880,
    (127, 2, 0): 7500643092746879795555340226920448,
    (127, 2, 1): -40753750134392715095317583757312,
    (127, 2, 2): 18431283045844636397570359296,
    (127, 3, 0): 3145004942869387790953029421760512,
    (127, 3, 1): -13364971198223394836438902112256,
    (127, 3, 2): 4836081067777146270441799680,
    (127, 4, 0): 770272502408480034558228662583296,
    (127, 4, 1): -2375768855890609381926506594304,
    (127, 4, 2): 559902659674956615116652544,
    (127, 5, 0): 103023316827132977625387302387712,
    (127, 5, 1): -175756081841412915895004561408,
    (127, 6, 0): 5791858949410061501809708498944,
    (127, 7, 0): -27893033280565876476004532224,
    (128, 0, 0): -3971440391791585601424980019511296,
    (128, 0, 1): 42590708081593865667766919364608,
    (128, 0, 2): -43869500142175663491737714688,
    (128, 1, 0): -5990721335580536199730653239967744,
    (128, 1, 1): 53304866350664579772284091236352,
    (128, 1, 2): -43869500142175663491737714688,
    (128, 2, 0): -3764952114131366133034723569565696,
    (128, 2, 1): 26685373986065149301894439501824,
    (128, 2, 2): -16451062553315873809401643008,
    (128, 3, 0): -1261798857662527408937255045169152,
    (128, 3, 1): 6679474731579015321302683615232,
    (128, 3, 2): -2741843758885978968233607168,
    (128, 4, 0): -221288906448790304325687968792576,
    (128, 4, 1): 645022522171112847993127043072,
    (128, 4, 2): 69815466082744834839281664,
    (128, 5, 0): -15489207689652111292220844277760,
    (128, 5, 1): -6170319604381204350538612736,
    (128, 6, 0): 68198086257744120006284673024,
    (129, 0, 0): 6471950525383968077172621443072,
    (129, 0, 1): -12379400392853802748991242240,
    (129, 0, 2): -2321137573660088015435857920,
    (129, 1, 0): -683515574978197108458598204178432,
    (129, 1, 1): 8288878989605743473455425126400,
    (129, 1, 2): -13810768563277523691843354624,
    (129, 2, 0): -868211881542328511267035294990336,
    (129, 2, 1): 8315939585151997332902048169984,
    (129, 2, 2): -9487649832335609763094069248,
    (129, 3, 0): -438819438574221207927588002988032,
    (129, 3, 1): 3126366189867894262517813215232,
    (129, 3, 2): -2299376908907024690291146752,
    (129, 4, 0): -110700707451759574306044514402304,
    (129, 4, 1): 522159844470860440453678891008,
    (129, 4, 2): -188592427859882151254163456,
    (129, 5, 0): -11056955975985444573554925371392,
    (129, 5, 1): -4259716238542906072110202880,
    (129, 5, 2): 52312014713988494854717440,
    (129, 6, 0): 40224553378288935007659491328,
    (130, 0, 0): 41931505010674400671383135715328,
    (130, 0, 1): 16655245288545506218492817309696,
    (130, 0, 2): -10831975343747077405367336960,
    (130, 1, 0): 74780398695616876938365759389696,
    (130, 1, 1): 29168807433156862054776252137472,
    (130, 1, 2): -15164765481245908367514271744,
    (130, 2, 0): -60986148894738567539565589954560,
    (130, 2, 1): 23491752230537544181814784950272,
    (130, 2, 2): -11500511321993967338979852288,
    (130, 3, 0): -99519837325397534535486149754880,
    (130, 3, 1): 9290877812380215030843843805184,
    (130, 3, 2): -3583860592247568188416458752,
    (130, 4, 0): -42471829570047880722501362253824,
    (130, 4, 1): 1738436688647383819685302632448,
    (130, 4, 2): -371820247395224385545568256,
    (130, 5, 0): -7590520322546235156389376819200,
    (130, 5, 1): 123307675738666179947225153536,
    (130, 6, 0): 5886349540666803974903431168,
    (130, 6, 1): -7121227125288043284881473536,
    (131, 0, 0): -14316291281840023010140611193864192,
    (131, 0, 1): 81926871799906466592824041144320,
    (131, 0, 2): -30174788457581144200666152960,
    (131, 1, 0): -25140718440940062719954285106298880,
    (131, 1, 1): 119541370408582924900565205909504,
    (131, 1, 2): -35203919867178001567443845120,
    (131, 2, 0): -18920694361652098768271139670065152,
    (131, 2, 1): 71763538819878405208436593655808,
    (131, 2, 2): -15841763940230100705349730304,
    (131, 3, 0): -7927394065440126263743042241429504,
    (131, 3, 1): 23596129072414341842815154126848,
    (131, 3, 2): -4342159312600844338250907648,
    (131, 4, 0): -1941287186414875087811321553485824,
    (131, 4, 1): 4215447263975211499590548193280,
    (131, 4, 2): -527620562398059720435826688,
    (131, 5, 0): -259649876932084612591961755353088,
    (131, 5, 1): 313453384382093814905077497856,
    (131, 6, 0): -14594699552210644948233092071424,
    (131, 7, 0): 87895849555009169738308780032,
    (132, 0, 0): 10394556658505823997513380810194944,
    (132, 0, 1): -77660930424529046165521659068416,
    (132, 0, 2): 38995111237489478659322413056,
    (132, 1, 0): 15652248318585921481755560826109952,
    (132, 1, 1): -97134733068769997261158238650368,
    (132, 1, 2): 38995111237489478659322413056,
    (132, 2, 0): 9820064547848992060292535741841408,
    (132, 2, 1): -48596496810934432735172839342080,
    (132, 2, 2): 14623166714058554497245904896,
    (132, 3, 0): 3285674744735108631312351885262848,
    (132, 3, 1): -12156353579134903666257952768000,
    (132, 3, 2): 2437194452343092416207650816,
    (132, 4, 0): 574325389510437613133305101680640,
    (132, 4, 1): -1158871757210759972013935165440,
    (132, 4, 2): -104723199124117252258922496,
    (132, 5, 0): 39781541963896642133709568344064,
    (132, 5, 1): 14639789444078255648398114816,
    (132, 6, 0): -222191177580600897456310321152,
    (133, 0, 0): -8180307779597792856533412872192,
    (133, 0, 1): 4951760157141521099596496896,
    (133, 0, 2): 1237940039285380274899124224,
    (133, 1, 0): 1864752254334438385717637925568512,
    (133, 1, 1): -15664661143359835989771974344704,
    (133, 1, 2): 11102774727340754340501520384,
    (133, 2, 0): 2351963673320838180333655374692352,
    (133, 2, 1): -15683617100211393375231367184384,
    (133, 2, 2): 7862853530773548152288968704,
    (133, 3, 0): 1183687897348091899373673963847680,
    (133, 3, 1): -5887444563006851788235582996480,
    (133, 3, 2): 1927027756465718904481644544,
    (133, 4, 0): 297606709180721529768705523712000,
    (133, 4, 1): -982111993041810907464502083584,
    (133, 4, 2): 158973745279323736473862144,
    (133, 5, 0): 29469758408943956278413812039680,
    (133, 5, 1): 10760799836117266112706510848,
    (133, 5, 2): -57915102545913328900767744,
    (133, 6, 0): -141331796346357795534470643712,
    (134, 0, 0): -61084913298497804284622385709056,
    (134, 0, 1): -24667193222800487357639949287424,
    (134, 0, 2): 6189700196426901374495621120,
    (134, 1, 0): -108704752789688527319166997233664,
    (134, 1, 1): -43179967540293706678618902495232,
    (134, 1, 2): 8665580274997661924293869568,
    (134, 2, 0): 250242808956949780647479607296000,
    (134, 2, 1): -35526635361169209137856610566144,
    (134, 2, 2): 7369611796370779449008848896,
    (134, 3, 0): 307101723789150231852731902984192,
    (134, 3, 1): -14312845127570036105132227166208,
    (134, 3, 2): 2446865858900009449605300224,
    (134, 4, 0): 122956121621479520301507065937920,
    (134, 4, 1): -2712106601575098319794184650752,
    (134, 4, 2): 262336902856374530911240192,
    (134, 5, 0): 21279842918068367334257392091136,
    (134, 5, 1): -193990886107371277833813884928,
    (134, 6, 0): -53690209037815103592463335424,
    (134, 6, 1): 14340995871974127456437141504,
    (135, 0, 0): 32955706865352136733241744809787392,
    (135, 0, 1): -125259724935051917735392985481216,
    (135, 0, 2): 18569100589280704123486863360,
    (135, 1, 0): 57805831725697864019483812582916096,
    (135, 1, 1): -182710665248227488223048992030720,
    (135, 1, 2): 21663950687494154810734673920,
    (135, 2, 0): 43454015588035478272939489945976832,
    (135, 2, 1): -109650538979702557849189928140800,
    (135, 2, 2): 9748777809372369664830603264,
    (135, 3, 0): 18200539862187434536497687992205312,
    (135, 3, 1): -36198541824601184657608206712832,
    (135, 3, 2): 2836139972815920043860688896,
    (135, 4, 0): 4458918649720594015450955314626560,
    (135, 4, 1): -6514149290043436323144915222528,
    (135, 4, 2): 365700060433425325348618240,
    (135, 5, 0): 596805235771108943871644750839808,
    (135, 5, 1): -488026730648406096677731041280,
    (135, 6, 0): 33565021445930135307315797032960,
    (135, 7, 0): -254345246779780713185747664896,
    (136, 0, 0): -24729724050064870486085653850226688,
    (136, 0, 1): 122843265978366855438789894995968,
    (136, 0, 2): -25996740824992985772881608704,
    (136, 1, 0): -37189331816004012308467885247823872,
    (136, 1, 1): 153593696554215701467284140720128,
    (136, 1, 2): -25996740824992985772881608704,
    (136, 2, 0): -23302096315469850319734149170069504,
    (136, 2, 1): 76816655317736416818040456347648,
    (136, 2, 2): -9748777809372369664830603264,
    (136, 3, 0): -7786769890701573591266202891583488,
    (136, 3, 1): 19209115589591245725609710583808,
    (136, 3, 2): -1624796301562061610805100544,
    (136, 4, 0): -1356774565274344361496788825276416,
    (136, 4, 1): 1799563453748830862817324171264,
    (136, 4, 2): 101549768847628850675318784,
    (136, 5, 0): -92845521080290814836871937392640,
    (136, 5, 1): -30684652922003614055098482688,
    (136, 6, 0): 660733419891369665090314829824,
    (137, 0, 0): 8239728901483491109728570834944,
    (137, 1, 0): -4601437981304229906363343530098688,
    (137, 1, 1): 25658783194268076957834147790848,
    (137, 1, 2): -6499185206248246443220402176,
    (137, 2, 0): -5779708072756015566632055067377664,
    (137, 2, 1): 25668686714582360000033340784640,
    (137, 2, 2): -4874388904686184832415301632,
    (137, 3, 0): -2900934992412156132829183957008384,
    (137, 3, 1): 9629355281207558136436428374016,
    (137, 3, 2): -1218597226171546208103825408,
    (137, 4, 0): -727742665706408222343180608077824,
    (137, 4, 1): 1605434145635113709943006429184,
    (137, 4, 2): -101549768847628850675318784,
    (137, 5, 0): -71443915153670862052138139254784,
    (137, 5, 1): -23722751358297868295259291648,
    (137, 5, 2): 47601454147326023754055680,
    (137, 6, 0): 445382779055864763511851712512,
    (138, 0, 0): 74474472763408477337931313315840,
    (138, 0, 1): 30780141136791695155091824705536,
    (138, 1, 0): 132202092675364330317027274129408,
    (138, 1, 1): 53865246989385466521410693234688,
    (138, 2, 0): -749085564381838959313246912249856,
    (138, 2, 1): 45719601530887664312574455840768,
    (138, 2, 2): -1624796301562061610805100544,
    (138, 3, 0): -819827028956782372432219916468224,
    (138, 3, 1): 18902764115494341775705767936000,
    (138, 3, 2): -812398150781030805402550272,
    (138, 4, 0): -317485429438984204760118189883392,
    (138, 4, 1): 3644340733151248856768659324928,
    (138, 4, 2): -101549768847628850675318784,
    (138, 5, 0): -53953232610537019232745808723968,
    (138, 5, 1): 263676392664507540036814635008,
    (138, 6, 0): 234770522970339400983649452032,
    (138, 6, 1): -25435043666054538692583751680,
    (139, 0, 0): -68485774415280264587910513197842432,
    (139, 0, 1): 161625451529099248690829658685440,
    (139, 1, 0): -120022376962607416547898360223236096,
    (139, 1, 1): 235703783479936404340793252249600,
    (139, 2, 0): -90145563148362341950160976262201344,
    (139, 2, 1): 141422270087961842604475951349760,
    (139, 3, 0): -37761799237040966778580999207911424,
    (139, 3, 1): 46972628964401835159573913141248,
    (139, 3, 2): -406199075390515402701275136,
    (139, 4, 0): -9261062084562465988425098784145408,
    (139, 4, 1): 8545055206485361854092362645504,
    (139, 4, 2): -101549768847628850675318784,
    (139, 5, 0): -1241377571496421688372234247208960,
    (139, 5, 1): 647316912261013962338072526848,
    (139, 6, 0): -69913965731749575980549199101952,
    (139, 7, 0): 672722790591670298101816492032,
    (140, 0, 0): 53081918146606935015623324197715968,
    (140, 0, 1): -164160752729555707493823065096192,
    (140, 1, 0): 79748949033511225650630713107546112,
    (140, 1, 1): -205200940911944634367278831370240,
    (140, 2, 0): 49921412660469944900115963685371904,
    (140, 2, 1): -102600470455972317183639415685120,
    (140, 3, 0): 16666395414479349638628833721581568,
    (140, 3, 1): -25650117613993079295909853921280,
    (140, 4, 0): 2894484628466207203570554889043968,
    (140, 4, 1): -2341399170396829200403933429760,
    (140, 4, 2): -101549768847628850675318784,
    (140, 5, 0): 195161203672010694211196644491264,
    (140, 5, 1): 56038547442416520764330082304,
    (140, 6, 0): -1785564092757693456974226653184,
    (141, 0, 0): -6021340351084089657109340225536,
    (141, 1, 0): 10216758758303500540911268992647168,
    (141, 1, 1): -35528879127490413889604865228800,
    (141, 2, 0): 12802679326966338543345300592918528,
    (141, 2, 1): -35528879127490413889604865228800,
    (141, 3, 0): 6415036232077822719034134206873600,
    (141, 3, 1): -13323329672808905208601824460800,
    (141, 4, 0): 1606966870146253921395865907363840,
    (141, 4, 1): -2220554945468150868100304076800,
    (141, 5, 0): 156289417375231743103244357861376,
    (141, 5, 1): 45308121867517072209638064128,
    (141, 5, 2): -25387442211907212668829696,
    (141, 6, 0): -1262582783192404875996334915584,
    (142, 0, 0): -72256084213009075885312082706432,
    (142, 0, 1): -30898983380563091661482140631040,
    (142, 1, 0): -127874254298022640875979935842304,
    (142, 1, 1): -54073220915985410407593746104320,
    (142, 2, 0): 1852797622117564379075471445327872,
    (142, 2, 1): -48197957489536995622922502537216,
    (142, 3, 0): 1923860332132702348375780772282368,
    (142, 3, 1): -20698976426871200886450806587392,
    (142, 4, 0): 732115572838305145159860992606208,
    (142, 4, 1): -4088451722244879030388720140288,
    (142, 5, 0): 123159830457787863775961755418624,
    (142, 5, 1): -300471258910298393598171807744,
    (142, 6, 0): -788567805024787235110742130688,
    (142, 6, 1): 38982417516383525052987998208,
    (143, 0, 0): 127137749299290039593710351279980544,
    (143, 0, 1): -168280617180297453048687350513664,
    (143, 1, 0): 222670909202664949335330459507228672,
    (143, 1, 1): -245409233387933785696002386165760,
    (143, 2, 0): 167137731128988561412816080644079616,
    (143, 2, 1): -147245540032760271417601431699456,
    (143, 3, 0): 70056477069915692579533484160188416,
    (143, 3, 1): -49400616237702742559987001720832,
    (143, 4, 0): 17212817505544769171793276282339328,
    (143, 4, 1): -9143115645151997365336206737408,
    (143, 5, 0): 2312823839155630995186570535895040,
    (143, 5, 1): -704658681736975053352735866880,
    (143, 6, 0): 130567944123661729934926646607872,
    (143, 7, 0): -1616371901988077067401160556544,
    (144, 0, 0): -101756848981520430516943359701942272,
    (144, 0, 1): 177471084031952116209538448752640,
    (144, 1, 0): -152771625139967694700413528691441664,
    (144, 1, 1): 221838855039940145261923060940800,
    (144, 2, 0): -95567128978052900576363340195954688,
    (144, 2, 1): 110919427519970072630961530470400,
    (144, 3, 0): -31883868668777911642107485477666816,
    (144, 3, 1): 27729856879992518157740382617600,
    (144, 4, 0): -5517297280353546189585656833900544,
    (144, 4, 1): 2426362476999345338802283479040,
    (144, 5, 0): -364991223704055762136837719588864,
    (144, 5, 1): -86655802749976619242938695680,
    (144, 6, 0): 4356697854507529868705924120576,
    (145, 0, 0): 2535301200456458802993406410752,
    (145, 1, 0): -20234951934305626085728718459764736,
    (145, 1, 1): 39930993907189226147146150969344,
    (145, 2, 0): -25323737198515567357193249617870848,
    (145, 2, 1): 39930993907189226147146150969344,
    (145, 3, 0): -12675901887543122749392881281138688,
    (145, 3, 1): 14974122715195959805179806613504,
    (145, 4, 0): -3172363713773304773160619223285760,
    (145, 4, 1): 2495687119199326634196634435584,
    (145, 5, 0): -305155430590823134217722140819456,
    (145, 5, 1): -72980433878495934018662432768,
    (145, 6, 0): 3212831586801281577665735688192,
    (146, 0, 0): 50706024009129176059868128215040,
    (146, 0, 1): 22817710804108129226940657696768,
    (146, 1, 0): 89369367316090172805517575979008,
    (146, 1, 1): 39930993907189226147146150969344,
    (146, 2, 0): -3924032240047112678417443158228992,
    (146, 2, 1): 38891124274189506716230886621184,
    (146, 3, 0): -3977461732142669691082089359736832,
    (146, 3, 1): 17759487803588065423702836117504,
    (146, 4, 0): -1500353617052938044051140980506624,
    (146, 4, 1): 3637686805440089937791076532224,
    (146, 5, 0): -251050526146957263608717695254528,
    (146, 5, 1): 273430006177158368218344062976,
    (146, 6, 0): 2224433179497474598492761489408,
    (146, 6, 1): -50165585810728652233607479296,
    (147, 0, 0): -207813568799015015163763536676519936,
    (147, 0, 1): 129300361223279398952663726948352,
    (147, 1, 0): -363812553139001267656050078184898560,
    (147, 1, 1): 188563026783949123472634601799680,
    (147, 2, 0): -272963362203469665552960288301514752,
    (147, 2, 1): 113137816070369474083580761079808,
    (147, 3, 0): -114550632471364464317633235188187136,
    (147, 3, 1): 38695529747982416632796824993792,
    (147, 4, 0): -28224812542379677470011100263088128,
    (147, 4, 1): 7394215854651576381972468989952,
    (147, 5, 0): -3806309713041249798485773490585600,
    (147, 5, 1): 587557291145823612973996834816,
    (147, 6, 0): -215667027602830426565146295926784,
    (147, 7, 0): 3499615387581903139747884171264,
    (148, 0, 0): 171771726933325996820409271141269504,
    (148, 0, 1): -141976867225561692967630759002112,
    (148, 1, 0): 257767242176908737073843371539169280,
    (148, 1, 1): -177471084031952116209538448752640,
    (148, 2, 0): 161172900264817770794495335641120768,
    (148, 2, 1): -88735542015976058104769224376320,
    (148, 3, 0): 53747038570914184129721125660786688,
    (148, 3, 1): -22183885503994014526192306094080,
    (148, 4, 0): 9260004419541401541652731844886528,
    (148, 4, 1): -1776443956374520694480243261440,
    (148, 5, 0): 596934377458400547211288976031744,
    (148, 5, 1): 110486148506220189534746836992,
    (148, 6, 0): -9509932753042746608042253484032,
    (149, 1, 0): 35286322107952993620062230424846336,
    (149, 1, 1): -33275828255991021789288459141120,
    (149, 2, 0): 44129928064120207510928793249251328,
    (149, 2, 1): -33275828255991021789288459141120,
    (149, 3, 0): 22075897518487072234052305689772032,
    (149, 3, 1): -12478435595996633170983172177920,
    (149, 4, 0): 5521678040667567329033456109748224,
    (149, 4, 1): -2079739265999438861830528696320,
    (149, 5, 0): 523735601905475654246641210228736,
    (149, 5, 1): 97487778093723696648306032640,
    (149, 6, 0): -7291312088885979146621479288832,
    (150, 0, 0): -20282409603651670423947251286016,
    (150, 0, 1): -10141204801825835211973625643008,
    (150, 1, 0): -35494216806390423241907689750528,
    (150, 1, 1): -17747108403195211620953844875264,
    (150, 2, 0): 7170624076516008138241288769110016,
    (150, 2, 1): -21074691228794313799882690789376,
    (150, 3, 0): 7196214773008115519284003465068544,
    (150, 3, 1): -10735416020682817743925205270528,
    (150, 4, 0): 2703641238758641954295288919228416,
    (150, 4, 1): -2327327273856514916810353541120,
    (150, 5, 0): 451226668439442539440180981399552,
    (150, 5, 1): -180739245735665520135272136704,
    (150, 6, 0): -5414362875571976641072863379456,
    (150, 6, 1): 51722682266392294610629033984,
    (151, 0, 0): 292959124315144727603494097575215104,
    (151, 0, 1): -60847228810955011271841753858048,
    (151, 1, 0): 512744385382715141234992499323305984,
    (151, 1, 1): -88735542015976058104769224376320,
    (151, 2, 0): 384607727410445256872902745917489152,
    (151, 2, 1): -53241325209585634862861534625792,
    (151, 3, 0): 161725437470192250284872711150764032,
    (151, 3, 1): -19074180125309139275645706043392,
    (151, 4, 0): 40019590799920802242660131491807232,
    (151, 4, 1): -3911890524141801668681232547840,
    (151, 5, 0): 5426274953600000212768080202301440,
    (151, 5, 1): -330529990489196533398066167808,
    (151, 6, 0): 309134053820207663416847154282496,
    (151, 7, 0): -6754007426209896439181668777984,
    (152, 0, 0): -250203804870647006349813291864293376,
    (152, 0, 1): 70988433612780846483815379501056,
    (152, 1, 0): -375361483932380551618385792737476608,
    (152, 1, 1): 88735542015976058104769224376320,
    (152, 2, 0): -234635787849244121070032279799070720,
    (152, 2, 1): 44367771007988029052384612188160,
    (152, 3, 0): -78223549413583465792857813045739520,
    (152, 3, 1): 11091942751997007263096153047040,
    (152, 4, 0): -13399700669712498888520901232427008,
    (152, 4, 1): 693246421999812953943509565440,
    (152, 5, 0): -831893230519696973971661680279552,
    (152, 5, 1): -103986963299971943091526434816,
    (152, 6, 0): 18331416101737911110706231508992,
    (153, 1, 0): -53129771956765550675529824743718912,
    (153, 1, 1): 17747108403195211620953844875264,
    (153, 2, 0): -66423623801358992409025751258497024,
    (153, 2, 1): 17747108403195211620953844875264,
    (153, 3, 0): -33217516328380523236819610793672704,
    (153, 3, 1): 6655165651198204357857691828224,
    (153, 4, 0): -8305805189020387567281586489524224,
    (153, 4, 1): 1109194275199700726309615304704,
    (153, 5, 0): -772712269001620084549834147627008,
    (153, 5, 1): -95321383024974281167232565248,
    (153, 6, 0): 14593456153115705370648325914624,
    (154, 2, 0): -11213637209618917285639836554756096,
    (154, 2, 1): 4436777100798802905238461218816,
    (154, 3, 0): -11218073986719716088545075015974912,
    (154, 3, 1): 3327582825599102178928845914112,
    (154, 4, 0): -4208362308270178819956274009997312,
    (154, 4, 1): 831895706399775544732211478528,
    (154, 5, 0): -701624800185696407644026838188032,
    (154, 5, 1): 69324642199981295394350956544,
    (154, 6, 0): 11425567592584417247181467025408,
    (154, 6, 1): -38995111237489478659322413056,
    (155, 0, 0): -345287741092566037297278005893136384,
    (155, 1, 0): -604253546911990565270236510312988672,
    (155, 2, 0): -453190160183992923952677382734741504,
    (155, 3, 0): -191178506884870017785272674688172032,
    (155, 3, 1): 1109194275199700726309615304704,
    (155, 4, 0): -47621513186123836868676275140558848,
    (155, 4, 1): 554597137599850363154807652352,
    (155, 5, 0): -6510514833487786243496278960898048,
    (155, 5, 1): 69324642199981295394350956544,
    (155, 6, 0): -373966830587641956483726638579712,
    (155, 7, 0): 11447231543271911401992201699328,
    (156, 0, 0): 305047440438921123176166659341680640,
    (156, 1, 0): 457571160658381684764249989012520960,
    (156, 2, 0): 285981975411488552977656243132825600,
    (156, 3, 0): 95327325137162850992552081044275200,
    (156, 4, 0): 16193127223640430903394073833373696,
    (156, 4, 1): 277298568799925181577403826176,
    (156, 5, 0): 946796349086087400327248592502784,
    (156, 5, 1): 69324642199981295394350956544,
    (156, 6, 0): -30626636571920308001004333301760,
    (157, 1, 0): 67053646149672422421569612751568896,
    (157, 2, 0): 83817057687090528026962015939461120,
    (157, 3, 0): 41908528843545264013481007969730560,
    (157, 4, 0): 10477132210886316003370251992432640,
    (157, 5, 0): 946618085720430305567663118614528,
    (157, 5, 1): 69324642199981295394350956544,
    (157, 6, 0): -25318349683464597382236888629248,
    (158, 2, 0): 14664182143440157716513862679789568,
    (158, 3, 0): 14664182143440157716513862679789568,
    (158, 4, 0): 5499068303790059143692698504921088,
    (158, 5, 0): 916511383965009857282116417486848,
    (158, 6, 0): -20728068017794407322910936006656,
    (158, 6, 1): 17331160549995323848587739136,
    (159, 0, 0): 323220479443793019876023396493950976,
    (159, 1, 0): 565635839026637784783040943864414208,
    (159, 2, 0): 424226879269978338587280707898310656,
    (159, 3, 0): 179950608605998532918866000222355456,
    (159, 4, 0): 45319776608759429332908636295397376,
    (159, 5, 0): 6279624160880591397664293503631360,
    (159, 6, 0): 365479513678301389319018242899968,
    (159, 7, 0): -16681242029370499204265698918400,
    (160, 0, 0): -295960920936485174826238290765545472,
    (160, 1, 0): -443941381404727762239357436148318208,
    (160, 2, 0): -277463363377954851399598397592698880,
    (160, 3, 0): -92487787792651617133199465864232960,
    (160, 4, 0): -15495760937189876203895699982516224,
    (160, 5, 0): -811296384146066816957890051440640,
    (160, 6, 0): 43100120407759799650887908982784,
    (161, 1, 0): -67499859160952759170896452279861248,
    (161, 2, 0): -84374823951190948963620565349826560,
    (161, 3, 0): -42187411975595474481810282674913280,
    (161, 4, 0): -10546852993898868620452570668728320,
    (161, 5, 0): -906528635488212550745329879744512,
    (161, 6, 0): 37039165975418577824981796782080,
    (162, 2, 0): -15333501660360662840504121972228096,
    (162, 3, 0): -15333501660360662840504121972228096,
    (162, 4, 0): -5750063122635248565189045739585536,
    (162, 5, 0): -958343853772541427531507623264256,
    (162, 6, 0): 31612036843191470699824036184064,
    (163, 0, 0): -218076468058462760398280845827244032,
    (163, 1, 0): -381633819102309830696991480197677056,
    (163, 2, 0): -286225364326732373022743610148257792,
    (163, 3, 0): -122728860511696257735304817531682816,
    (163, 4, 0): -31564499945682912097267909813862400,
    (163, 5, 0): -4483680173007247393093839237414912,
    (163, 6, 0): -267157363998099346365430200532992,
    (163, 7, 0): 20242795522394538255150479310848,
    (164, 0, 0): 207691874341393105141219853168803840,
    (164, 1, 0): 311537811512089657711829779753205760,
    (164, 2, 0): 194711132195056036069893612345753600,
    (164, 3, 0): 64903710731685345356631204115251200,
    (164, 4, 0): 10577276608304346126088491545657344,
    (164, 5, 0): 420859999275772161296905464184832,
    (164, 6, 0): -48804548108786831957623073406976,
    (165, 1, 0): 49326820156080862471039715127590912,
    (165, 2, 0): 61658525195101078088799643909488640,
    (165, 3, 0): 30829262597550539044399821954744320,
    (165, 4, 0): 7707315649387634761099955488686080,
    (165, 5, 0): 595795782107267818703450506526720,
    (165, 6, 0): -43733945707873914351636260585472,
    (166, 2, 0): 11682667931703362164193616740745216,
    (166, 3, 0): 11682667931703362164193616740745216,
    (166, 4, 0): 4381000474388760811572606277779456,
    (166, 5, 0): 730166745731460135262101046296576,
    (166, 6, 0): -38980255957018054096023623565312,
    (167, 0, 0): 83076749736557242056487941267521536,
    (167, 1, 0): 145384312038975173598853897218162688,
    (167, 2, 0): 109038234029231380199140422913622016,
    (167, 3, 0): 48191005218276368927298669055574016,
    (167, 4, 0): 13102436603958979093869924330766336,
    (167, 5, 0): 1977534936356037866334857000386560,
    (167, 6, 0): 124229758822366481346676914126848,
    (167, 7, 0): -19410899815994762710418267832320,
    (168, 0, 0): -83076749736557242056487941267521536,
    (168, 1, 0): -124615124604835863084731911901282304,
    (168, 2, 0): -77884452878022414427957444938301440,
    (168, 3, 0): -25961484292674138142652481646100480,
    (168, 4, 0): -3894222643901120721397872246915072,
    (168, 6, 0): 40564819207303340847894502572032,
    (169, 1, 0): -20769187434139310514121985316880384,
    (169, 2, 0): -25961484292674138142652481646100480,
    (169, 3, 0): -12980742146337069071326240823050240,
    (169, 4, 0): -3245185536584267267831560205762560,
    (169, 5, 0): -172400481631039198603551635931136,
    (169, 6, 0): 38029518006846882044901096161280,
    (170, 2, 0): -5192296858534827628530496329220096,
    (170, 3, 0): -5192296858534827628530496329220096,
    (170, 4, 0): -1947111321950560360698936123457536,
    (170, 5, 0): -324518553658426726783156020576256,
    (170, 6, 0): 35494216806390423241907689750528,
    (171, 3, 0): -1298074214633706907132624082305024,
    (171, 4, 0): -973555660975280180349468061728768,
    (171, 5, 0): -243388915243820045087367015432192,
    (171, 6, 0): -20282409603651670423947251286016,
    (171, 7, 0): 13310331302396408715715383656448,
    (172, 4, 0): -324518553658426726783156020576256,
    (172, 5, 0): -162259276829213363391578010288128,
    (172, 6, 0): -20282409603651670423947251286016,
    (173, 5, 0): -81129638414606681695789005144064,
    (173, 6, 0): -20282409603651670423947251286016,
    (174, 6, 0): -20282409603651670423947251286016,
    (175, 7, 0): -5070602400912917605986812821504,
}

CHAIN = [
    ([16777216, 33554432, 29360128, 14680064, 4521984, 851968, 90112, 4096], [0, 0, 0, 0, 0, 0, 0, 0, 1]),
    ([1048576, 2097152, 1835008, 917504, 278528, 49152, 4096], [0, 0, 0, 0, 256, 256, 96, 16, 1]),
    ([65536, 131072, 98304, 32768, 4096], [0, 0, 1024, 1536, 1088, 448, 112, 16, 1]),
    ([4096], [0, 512, 1408, 1664, 1104, 448, 112, 16, 1]),
]
