// Generated by scripts/gen_unicode_tables.py from unicodedata (UCD 13.0.0). Do not edit by hand.

#include "tashkeel/unicode_tables.hpp"

namespace tashkeel::uni::tables {

const Range32 kPunctuationRanges[] = {
    {0x0021, 0x0023},
    {0x0025, 0x002A},
    {0x002C, 0x002F},
    {0x003A, 0x003B},
    {0x003F, 0x0040},
    {0x005B, 0x005D},
    {0x005F, 0x005F},
    {0x007B, 0x007B},
    {0x007D, 0x007D},
    {0x00A1, 0x00A1},
    {0x00A7, 0x00A7},
    {0x00AB, 0x00AB},
    {0x00B6, 0x00B7},
    {0x00BB, 0x00BB},
    {0x00BF, 0x00BF},
    {0x037E, 0x037E},
    {0x0387, 0x0387},
    {0x055A, 0x055F},
    {0x0589, 0x058A},
    {0x05BE, 0x05BE},
    {0x05C0, 0x05C0},
    {0x05C3, 0x05C3},
    {0x05C6, 0x05C6},
    {0x05F3, 0x05F4},
    {0x0609, 0x060A},
    {0x060C, 0x060D},
    {0x061B, 0x061B},
    {0x061E, 0x061F},
    {0x066A, 0x066D},
    {0x06D4, 0x06D4},
    {0x0700, 0x070D},
    {0x07F7, 0x07F9},
    {0x0830, 0x083E},
    {0x085E, 0x085E},
    {0x0964, 0x0965},
    {0x0970, 0x0970},
    {0x09FD, 0x09FD},
    {0x0A76, 0x0A76},
    {0x0AF0, 0x0AF0},
    {0x0C77, 0x0C77},
    {0x0C84, 0x0C84},
    {0x0DF4, 0x0DF4},
    {0x0E4F, 0x0E4F},
    {0x0E5A, 0x0E5B},
    {0x0F04, 0x0F12},
    {0x0F14, 0x0F14},
    {0x0F3A, 0x0F3D},
    {0x0F85, 0x0F85},
    {0x0FD0, 0x0FD4},
    {0x0FD9, 0x0FDA},
    {0x104A, 0x104F},
    {0x10FB, 0x10FB},
    {0x1360, 0x1368},
    {0x1400, 0x1400},
    {0x166E, 0x166E},
    {0x169B, 0x169C},
    {0x16EB, 0x16ED},
    {0x1735, 0x1736},
    {0x17D4, 0x17D6},
    {0x17D8, 0x17DA},
    {0x1800, 0x180A},
    {0x1944, 0x1945},
    {0x1A1E, 0x1A1F},
    {0x1AA0, 0x1AA6},
    {0x1AA8, 0x1AAD},
    {0x1B5A, 0x1B60},
    {0x1BFC, 0x1BFF},
    {0x1C3B, 0x1C3F},
    {0x1C7E, 0x1C7F},
    {0x1CC0, 0x1CC7},
    {0x1CD3, 0x1CD3},
    {0x2010, 0x2027},
    {0x2030, 0x2043},
    {0x2045, 0x2051},
    {0x2053, 0x205E},
    {0x207D, 0x207E},
    {0x208D, 0x208E},
    {0x2308, 0x230B},
    {0x2329, 0x232A},
    {0x2768, 0x2775},
    {0x27C5, 0x27C6},
    {0x27E6, 0x27EF},
    {0x2983, 0x2998},
    {0x29D8, 0x29DB},
    {0x29FC, 0x29FD},
    {0x2CF9, 0x2CFC},
    {0x2CFE, 0x2CFF},
    {0x2D70, 0x2D70},
    {0x2E00, 0x2E2E},
    {0x2E30, 0x2E4F},
    {0x2E52, 0x2E52},
    {0x3001, 0x3003},
    {0x3008, 0x3011},
    {0x3014, 0x301F},
    {0x3030, 0x3030},
    {0x303D, 0x303D},
    {0x30A0, 0x30A0},
    {0x30FB, 0x30FB},
    {0xA4FE, 0xA4FF},
    {0xA60D, 0xA60F},
    {0xA673, 0xA673},
    {0xA67E, 0xA67E},
    {0xA6F2, 0xA6F7},
    {0xA874, 0xA877},
    {0xA8CE, 0xA8CF},
    {0xA8F8, 0xA8FA},
    {0xA8FC, 0xA8FC},
    {0xA92E, 0xA92F},
    {0xA95F, 0xA95F},
    {0xA9C1, 0xA9CD},
    {0xA9DE, 0xA9DF},
    {0xAA5C, 0xAA5F},
    {0xAADE, 0xAADF},
    {0xAAF0, 0xAAF1},
    {0xABEB, 0xABEB},
    {0xFD3E, 0xFD3F},
    {0xFE10, 0xFE19},
    {0xFE30, 0xFE52},
    {0xFE54, 0xFE61},
    {0xFE63, 0xFE63},
    {0xFE68, 0xFE68},
    {0xFE6A, 0xFE6B},
    {0xFF01, 0xFF03},
    {0xFF05, 0xFF0A},
    {0xFF0C, 0xFF0F},
    {0xFF1A, 0xFF1B},
    {0xFF1F, 0xFF20},
    {0xFF3B, 0xFF3D},
    {0xFF3F, 0xFF3F},
    {0xFF5B, 0xFF5B},
    {0xFF5D, 0xFF5D},
    {0xFF5F, 0xFF65},
    {0x10100, 0x10102},
    {0x1039F, 0x1039F},
    {0x103D0, 0x103D0},
    {0x1056F, 0x1056F},
    {0x10857, 0x10857},
    {0x1091F, 0x1091F},
    {0x1093F, 0x1093F},
    {0x10A50, 0x10A58},
    {0x10A7F, 0x10A7F},
    {0x10AF0, 0x10AF6},
    {0x10B39, 0x10B3F},
    {0x10B99, 0x10B9C},
    {0x10EAD, 0x10EAD},
    {0x10F55, 0x10F59},
    {0x11047, 0x1104D},
    {0x110BB, 0x110BC},
    {0x110BE, 0x110C1},
    {0x11140, 0x11143},
    {0x11174, 0x11175},
    {0x111C5, 0x111C8},
    {0x111CD, 0x111CD},
    {0x111DB, 0x111DB},
    {0x111DD, 0x111DF},
    {0x11238, 0x1123D},
    {0x112A9, 0x112A9},
    {0x1144B, 0x1144F},
    {0x1145A, 0x1145B},
    {0x1145D, 0x1145D},
    {0x114C6, 0x114C6},
    {0x115C1, 0x115D7},
    {0x11641, 0x11643},
    {0x11660, 0x1166C},
    {0x1173C, 0x1173E},
    {0x1183B, 0x1183B},
    {0x11944, 0x11946},
    {0x119E2, 0x119E2},
    {0x11A3F, 0x11A46},
    {0x11A9A, 0x11A9C},
    {0x11A9E, 0x11AA2},
    {0x11C41, 0x11C45},
    {0x11C70, 0x11C71},
    {0x11EF7, 0x11EF8},
    {0x11FFF, 0x11FFF},
    {0x12470, 0x12474},
    {0x16A6E, 0x16A6F},
    {0x16AF5, 0x16AF5},
    {0x16B37, 0x16B3B},
    {0x16B44, 0x16B44},
    {0x16E97, 0x16E9A},
    {0x16FE2, 0x16FE2},
    {0x1BC9F, 0x1BC9F},
    {0x1DA87, 0x1DA8B},
    {0x1E95E, 0x1E95F},
};
const std::size_t kPunctuationRangeCount = 185;

const Range32 kArabicLetterRanges[] = {
    {0x0620, 0x064A},
    {0x066E, 0x066F},
    {0x0671, 0x06D3},
    {0x06D5, 0x06D5},
    {0x06E5, 0x06E6},
    {0x06EE, 0x06EF},
    {0x06FA, 0x06FC},
    {0x06FF, 0x06FF},
    {0x0750, 0x077F},
    {0x08A0, 0x08B4},
    {0x08B6, 0x08C7},
    {0xFB50, 0xFBB1},
    {0xFBD3, 0xFD3D},
    {0xFD50, 0xFD8F},
    {0xFD92, 0xFDC7},
    {0xFDF0, 0xFDFB},
    {0xFE70, 0xFE74},
    {0xFE76, 0xFEFC},
    {0x1EE00, 0x1EE03},
    {0x1EE05, 0x1EE1F},
    {0x1EE21, 0x1EE22},
    {0x1EE24, 0x1EE24},
    {0x1EE27, 0x1EE27},
    {0x1EE29, 0x1EE32},
    {0x1EE34, 0x1EE37},
    {0x1EE39, 0x1EE39},
    {0x1EE3B, 0x1EE3B},
    {0x1EE42, 0x1EE42},
    {0x1EE47, 0x1EE47},
    {0x1EE49, 0x1EE49},
    {0x1EE4B, 0x1EE4B},
    {0x1EE4D, 0x1EE4F},
    {0x1EE51, 0x1EE52},
    {0x1EE54, 0x1EE54},
    {0x1EE57, 0x1EE57},
    {0x1EE59, 0x1EE59},
    {0x1EE5B, 0x1EE5B},
    {0x1EE5D, 0x1EE5D},
    {0x1EE5F, 0x1EE5F},
    {0x1EE61, 0x1EE62},
    {0x1EE64, 0x1EE64},
    {0x1EE67, 0x1EE6A},
    {0x1EE6C, 0x1EE72},
    {0x1EE74, 0x1EE77},
    {0x1EE79, 0x1EE7C},
    {0x1EE7E, 0x1EE7E},
    {0x1EE80, 0x1EE89},
    {0x1EE8B, 0x1EE9B},
    {0x1EEA1, 0x1EEA3},
    {0x1EEA5, 0x1EEA9},
    {0x1EEAB, 0x1EEBB},
};
const std::size_t kArabicLetterRangeCount = 51;

const CccRange kCombiningClassRanges[] = {
    {0x0300, 0x0314, 230},
    {0x0315, 0x0315, 232},
    {0x0316, 0x0319, 220},
    {0x031A, 0x031A, 232},
    {0x031B, 0x031B, 216},
    {0x031C, 0x0320, 220},
    {0x0321, 0x0322, 202},
    {0x0323, 0x0326, 220},
    {0x0327, 0x0328, 202},
    {0x0329, 0x0333, 220},
    {0x0334, 0x0338, 1},
    {0x0339, 0x033C, 220},
    {0x033D, 0x0344, 230},
    {0x0345, 0x0345, 240},
    {0x0346, 0x0346, 230},
    {0x0347, 0x0349, 220},
    {0x034A, 0x034C, 230},
    {0x034D, 0x034E, 220},
    {0x0350, 0x0352, 230},
    {0x0353, 0x0356, 220},
    {0x0357, 0x0357, 230},
    {0x0358, 0x0358, 232},
    {0x0359, 0x035A, 220},
    {0x035B, 0x035B, 230},
    {0x035C, 0x035C, 233},
    {0x035D, 0x035E, 234},
    {0x035F, 0x035F, 233},
    {0x0360, 0x0361, 234},
    {0x0362, 0x0362, 233},
    {0x0363, 0x036F, 230},
    {0x0483, 0x0487, 230},
    {0x0591, 0x0591, 220},
    {0x0592, 0x0595, 230},
    {0x0596, 0x0596, 220},
    {0x0597, 0x0599, 230},
    {0x059A, 0x059A, 222},
    {0x059B, 0x059B, 220},
    {0x059C, 0x05A1, 230},
    {0x05A2, 0x05A7, 220},
    {0x05A8, 0x05A9, 230},
    {0x05AA, 0x05AA, 220},
    {0x05AB, 0x05AC, 230},
    {0x05AD, 0x05AD, 222},
    {0x05AE, 0x05AE, 228},
    {0x05AF, 0x05AF, 230},
    {0x05B0, 0x05B0, 10},
    {0x05B1, 0x05B1, 11},
    {0x05B2, 0x05B2, 12},
    {0x05B3, 0x05B3, 13},
    {0x05B4, 0x05B4, 14},
    {0x05B5, 0x05B5, 15},
    {0x05B6, 0x05B6, 16},
    {0x05B7, 0x05B7, 17},
    {0x05B8, 0x05B8, 18},
    {0x05B9, 0x05BA, 19},
    {0x05BB, 0x05BB, 20},
    {0x05BC, 0x05BC, 21},
    {0x05BD, 0x05BD, 22},
    {0x05BF, 0x05BF, 23},
    {0x05C1, 0x05C1, 24},
    {0x05C2, 0x05C2, 25},
    {0x05C4, 0x05C4, 230},
    {0x05C5, 0x05C5, 220},
    {0x05C7, 0x05C7, 18},
    {0x0610, 0x0617, 230},
    {0x0618, 0x0618, 30},
    {0x0619, 0x0619, 31},
    {0x061A, 0x061A, 32},
    {0x064B, 0x064B, 27},
    {0x064C, 0x064C, 28},
    {0x064D, 0x064D, 29},
    {0x064E, 0x064E, 30},
    {0x064F, 0x064F, 31},
    {0x0650, 0x0650, 32},
    {0x0651, 0x0651, 33},
    {0x0652, 0x0652, 34},
    {0x0653, 0x0654, 230},
    {0x0655, 0x0656, 220},
    {0x0657, 0x065B, 230},
    {0x065C, 0x065C, 220},
    {0x065D, 0x065E, 230},
    {0x065F, 0x065F, 220},
    {0x0670, 0x0670, 35},
    {0x06D6, 0x06DC, 230},
    {0x06DF, 0x06E2, 230},
    {0x06E3, 0x06E3, 220},
    {0x06E4, 0x06E4, 230},
    {0x06E7, 0x06E8, 230},
    {0x06EA, 0x06EA, 220},
    {0x06EB, 0x06EC, 230},
    {0x06ED, 0x06ED, 220},
    {0x0711, 0x0711, 36},
    {0x0730, 0x0730, 230},
    {0x0731, 0x0731, 220},
    {0x0732, 0x0733, 230},
    {0x0734, 0x0734, 220},
    {0x0735, 0x0736, 230},
    {0x0737, 0x0739, 220},
    {0x073A, 0x073A, 230},
    {0x073B, 0x073C, 220},
    {0x073D, 0x073D, 230},
    {0x073E, 0x073E, 220},
    {0x073F, 0x0741, 230},
    {0x0742, 0x0742, 220},
    {0x0743, 0x0743, 230},
    {0x0744, 0x0744, 220},
    {0x0745, 0x0745, 230},
    {0x0746, 0x0746, 220},
    {0x0747, 0x0747, 230},
    {0x0748, 0x0748, 220},
    {0x0749, 0x074A, 230},
    {0x07EB, 0x07F1, 230},
    {0x07F2, 0x07F2, 220},
    {0x07F3, 0x07F3, 230},
    {0x07FD, 0x07FD, 220},
    {0x0816, 0x0819, 230},
    {0x081B, 0x0823, 230},
    {0x0825, 0x0827, 230},
    {0x0829, 0x082D, 230},
    {0x0859, 0x085B, 220},
    {0x08D3, 0x08D3, 220},
    {0x08D4, 0x08E1, 230},
    {0x08E3, 0x08E3, 220},
    {0x08E4, 0x08E5, 230},
    {0x08E6, 0x08E6, 220},
    {0x08E7, 0x08E8, 230},
    {0x08E9, 0x08E9, 220},
    {0x08EA, 0x08EC, 230},
    {0x08ED, 0x08EF, 220},
    {0x08F0, 0x08F0, 27},
    {0x08F1, 0x08F1, 28},
    {0x08F2, 0x08F2, 29},
    {0x08F3, 0x08F5, 230},
    {0x08F6, 0x08F6, 220},
    {0x08F7, 0x08F8, 230},
    {0x08F9, 0x08FA, 220},
    {0x08FB, 0x08FF, 230},
    {0x093C, 0x093C, 7},
    {0x094D, 0x094D, 9},
    {0x0951, 0x0951, 230},
    {0x0952, 0x0952, 220},
    {0x0953, 0x0954, 230},
    {0x09BC, 0x09BC, 7},
    {0x09CD, 0x09CD, 9},
    {0x09FE, 0x09FE, 230},
    {0x0A3C, 0x0A3C, 7},
    {0x0A4D, 0x0A4D, 9},
    {0x0ABC, 0x0ABC, 7},
    {0x0ACD, 0x0ACD, 9},
    {0x0B3C, 0x0B3C, 7},
    {0x0B4D, 0x0B4D, 9},
    {0x0BCD, 0x0BCD, 9},
    {0x0C4D, 0x0C4D, 9},
    {0x0C55, 0x0C55, 84},
    {0x0C56, 0x0C56, 91},
    {0x0CBC, 0x0CBC, 7},
    {0x0CCD, 0x0CCD, 9},
    {0x0D3B, 0x0D3C, 9},
    {0x0D4D, 0x0D4D, 9},
    {0x0DCA, 0x0DCA, 9},
    {0x0E38, 0x0E39, 103},
    {0x0E3A, 0x0E3A, 9},
    {0x0E48, 0x0E4B, 107},
    {0x0EB8, 0x0EB9, 118},
    {0x0EBA, 0x0EBA, 9},
    {0x0EC8, 0x0ECB, 122},
    {0x0F18, 0x0F19, 220},
    {0x0F35, 0x0F35, 220},
    {0x0F37, 0x0F37, 220},
    {0x0F39, 0x0F39, 216},
    {0x0F71, 0x0F71, 129},
    {0x0F72, 0x0F72, 130},
    {0x0F74, 0x0F74, 132},
    {0x0F7A, 0x0F7D, 130},
    {0x0F80, 0x0F80, 130},
    {0x0F82, 0x0F83, 230},
    {0x0F84, 0x0F84, 9},
    {0x0F86, 0x0F87, 230},
    {0x0FC6, 0x0FC6, 220},
    {0x1037, 0x1037, 7},
    {0x1039, 0x103A, 9},
    {0x108D, 0x108D, 220},
    {0x135D, 0x135F, 230},
    {0x1714, 0x1714, 9},
    {0x1734, 0x1734, 9},
    {0x17D2, 0x17D2, 9},
    {0x17DD, 0x17DD, 230},
    {0x18A9, 0x18A9, 228},
    {0x1939, 0x1939, 222},
    {0x193A, 0x193A, 230},
    {0x193B, 0x193B, 220},
    {0x1A17, 0x1A17, 230},
    {0x1A18, 0x1A18, 220},
    {0x1A60, 0x1A60, 9},
    {0x1A75, 0x1A7C, 230},
    {0x1A7F, 0x1A7F, 220},
    {0x1AB0, 0x1AB4, 230},
    {0x1AB5, 0x1ABA, 220},
    {0x1ABB, 0x1ABC, 230},
    {0x1ABD, 0x1ABD, 220},
    {0x1ABF, 0x1AC0, 220},
    {0x1B34, 0x1B34, 7},
    {0x1B44, 0x1B44, 9},
    {0x1B6B, 0x1B6B, 230},
    {0x1B6C, 0x1B6C, 220},
    {0x1B6D, 0x1B73, 230},
    {0x1BAA, 0x1BAB, 9},
    {0x1BE6, 0x1BE6, 7},
    {0x1BF2, 0x1BF3, 9},
    {0x1C37, 0x1C37, 7},
    {0x1CD0, 0x1CD2, 230},
    {0x1CD4, 0x1CD4, 1},
    {0x1CD5, 0x1CD9, 220},
    {0x1CDA, 0x1CDB, 230},
    {0x1CDC, 0x1CDF, 220},
    {0x1CE0, 0x1CE0, 230},
    {0x1CE2, 0x1CE8, 1},
    {0x1CED, 0x1CED, 220},
    {0x1CF4, 0x1CF4, 230},
    {0x1CF8, 0x1CF9, 230},
    {0x1DC0, 0x1DC1, 230},
    {0x1DC2, 0x1DC2, 220},
    {0x1DC3, 0x1DC9, 230},
    {0x1DCA, 0x1DCA, 220},
    {0x1DCB, 0x1DCC, 230},
    {0x1DCD, 0x1DCD, 234},
    {0x1DCE, 0x1DCE, 214},
    {0x1DCF, 0x1DCF, 220},
    {0x1DD0, 0x1DD0, 202},
    {0x1DD1, 0x1DF5, 230},
    {0x1DF6, 0x1DF6, 232},
    {0x1DF7, 0x1DF8, 228},
    {0x1DF9, 0x1DF9, 220},
    {0x1DFB, 0x1DFB, 230},
    {0x1DFC, 0x1DFC, 233},
    {0x1DFD, 0x1DFD, 220},
    {0x1DFE, 0x1DFE, 230},
    {0x1DFF, 0x1DFF, 220},
    {0x20D0, 0x20D1, 230},
    {0x20D2, 0x20D3, 1},
    {0x20D4, 0x20D7, 230},
    {0x20D8, 0x20DA, 1},
    {0x20DB, 0x20DC, 230},
    {0x20E1, 0x20E1, 230},
    {0x20E5, 0x20E6, 1},
    {0x20E7, 0x20E7, 230},
    {0x20E8, 0x20E8, 220},
    {0x20E9, 0x20E9, 230},
    {0x20EA, 0x20EB, 1},
    {0x20EC, 0x20EF, 220},
    {0x20F0, 0x20F0, 230},
    {0x2CEF, 0x2CF1, 230},
    {0x2D7F, 0x2D7F, 9},
    {0x2DE0, 0x2DFF, 230},
    {0x302A, 0x302A, 218},
    {0x302B, 0x302B, 228},
    {0x302C, 0x302C, 232},
    {0x302D, 0x302D, 222},
    {0x302E, 0x302F, 224},
    {0x3099, 0x309A, 8},
    {0xA66F, 0xA66F, 230},
    {0xA674, 0xA67D, 230},
    {0xA69E, 0xA69F, 230},
    {0xA6F0, 0xA6F1, 230},
    {0xA806, 0xA806, 9},
    {0xA82C, 0xA82C, 9},
    {0xA8C4, 0xA8C4, 9},
    {0xA8E0, 0xA8F1, 230},
    {0xA92B, 0xA92D, 220},
    {0xA953, 0xA953, 9},
    {0xA9B3, 0xA9B3, 7},
    {0xA9C0, 0xA9C0, 9},
    {0xAAB0, 0xAAB0, 230},
    {0xAAB2, 0xAAB3, 230},
    {0xAAB4, 0xAAB4, 220},
    {0xAAB7, 0xAAB8, 230},
    {0xAABE, 0xAABF, 230},
    {0xAAC1, 0xAAC1, 230},
    {0xAAF6, 0xAAF6, 9},
    {0xABED, 0xABED, 9},
    {0xFB1E, 0xFB1E, 26},
    {0xFE20, 0xFE26, 230},
    {0xFE27, 0xFE2D, 220},
    {0xFE2E, 0xFE2F, 230},
    {0x101FD, 0x101FD, 220},
    {0x102E0, 0x102E0, 220},
    {0x10376, 0x1037A, 230},
    {0x10A0D, 0x10A0D, 220},
    {0x10A0F, 0x10A0F, 230},
    {0x10A38, 0x10A38, 230},
    {0x10A39, 0x10A39, 1},
    {0x10A3A, 0x10A3A, 220},
    {0x10A3F, 0x10A3F, 9},
    {0x10AE5, 0x10AE5, 230},
    {0x10AE6, 0x10AE6, 220},
    {0x10D24, 0x10D27, 230},
    {0x10EAB, 0x10EAC, 230},
    {0x10F46, 0x10F47, 220},
    {0x10F48, 0x10F4A, 230},
    {0x10F4B, 0x10F4B, 220},
    {0x10F4C, 0x10F4C, 230},
    {0x10F4D, 0x10F50, 220},
    {0x11046, 0x11046, 9},
    {0x1107F, 0x1107F, 9},
    {0x110B9, 0x110B9, 9},
    {0x110BA, 0x110BA, 7},
    {0x11100, 0x11102, 230},
    {0x11133, 0x11134, 9},
    {0x11173, 0x11173, 7},
    {0x111C0, 0x111C0, 9},
    {0x111CA, 0x111CA, 7},
    {0x11235, 0x11235, 9},
    {0x11236, 0x11236, 7},
    {0x112E9, 0x112E9, 7},
    {0x112EA, 0x112EA, 9},
    {0x1133B, 0x1133C, 7},
    {0x1134D, 0x1134D, 9},
    {0x11366, 0x1136C, 230},
    {0x11370, 0x11374, 230},
    {0x11442, 0x11442, 9},
    {0x11446, 0x11446, 7},
    {0x1145E, 0x1145E, 230},
    {0x114C2, 0x114C2, 9},
    {0x114C3, 0x114C3, 7},
    {0x115BF, 0x115BF, 9},
    {0x115C0, 0x115C0, 7},
    {0x1163F, 0x1163F, 9},
    {0x116B6, 0x116B6, 9},
    {0x116B7, 0x116B7, 7},
    {0x1172B, 0x1172B, 9},
    {0x11839, 0x11839, 9},
    {0x1183A, 0x1183A, 7},
    {0x1193D, 0x1193E, 9},
    {0x11943, 0x11943, 7},
    {0x119E0, 0x119E0, 9},
    {0x11A34, 0x11A34, 9},
    {0x11A47, 0x11A47, 9},
    {0x11A99, 0x11A99, 9},
    {0x11C3F, 0x11C3F, 9},
    {0x11D42, 0x11D42, 7},
    {0x11D44, 0x11D45, 9},
    {0x11D97, 0x11D97, 9},
    {0x16AF0, 0x16AF4, 1},
    {0x16B30, 0x16B36, 230},
    {0x16FF0, 0x16FF1, 6},
    {0x1BC9E, 0x1BC9E, 1},
    {0x1D165, 0x1D166, 216},
    {0x1D167, 0x1D169, 1},
    {0x1D16D, 0x1D16D, 226},
    {0x1D16E, 0x1D172, 216},
    {0x1D17B, 0x1D182, 220},
    {0x1D185, 0x1D189, 230},
    {0x1D18A, 0x1D18B, 220},
    {0x1D1AA, 0x1D1AD, 230},
    {0x1D242, 0x1D244, 230},
    {0x1E000, 0x1E006, 230},
    {0x1E008, 0x1E018, 230},
    {0x1E01B, 0x1E021, 230},
    {0x1E023, 0x1E024, 230},
    {0x1E026, 0x1E02A, 230},
    {0x1E130, 0x1E136, 230},
    {0x1E2EC, 0x1E2EF, 230},
    {0x1E8D0, 0x1E8D6, 220},
    {0x1E944, 0x1E949, 230},
    {0x1E94A, 0x1E94A, 7},
};
const std::size_t kCombiningClassRangeCount = 365;

const char32_t kDecompPool[] = {
    0x0671, 0x0671, 0x067B, 0x067B, 0x067B, 0x067B, 0x067E, 0x067E,
    0x067E, 0x067E, 0x0680, 0x0680, 0x0680, 0x0680, 0x067A, 0x067A,
    0x067A, 0x067A, 0x067F, 0x067F, 0x067F, 0x067F, 0x0679, 0x0679,
    0x0679, 0x0679, 0x06A4, 0x06A4, 0x06A4, 0x06A4, 0x06A6, 0x06A6,
    0x06A6, 0x06A6, 0x0684, 0x0684, 0x0684, 0x0684, 0x0683, 0x0683,
    0x0683, 0x0683, 0x0686, 0x0686, 0x0686, 0x0686, 0x0687, 0x0687,
    0x0687, 0x0687, 0x068D, 0x068D, 0x068C, 0x068C, 0x068E, 0x068E,
    0x0688, 0x0688, 0x0698, 0x0698, 0x0691, 0x0691, 0x06A9, 0x06A9,
    0x06A9, 0x06A9, 0x06AF, 0x06AF, 0x06AF, 0x06AF, 0x06B3, 0x06B3,
    0x06B3, 0x06B3, 0x06B1, 0x06B1, 0x06B1, 0x06B1, 0x06BA, 0x06BA,
    0x06BB, 0x06BB, 0x06BB, 0x06BB, 0x06D5, 0x0654, 0x06D5, 0x0654,
    0x06C1, 0x06C1, 0x06C1, 0x06C1, 0x06BE, 0x06BE, 0x06BE, 0x06BE,
    0x06D2, 0x06D2, 0x06D2, 0x0654, 0x06D2, 0x0654, 0x06AD, 0x06AD,
    0x06AD, 0x06AD, 0x06C7, 0x06C7, 0x06C6, 0x06C6, 0x06C8, 0x06C8,
    0x06C7, 0x0674, 0x06CB, 0x06CB, 0x06C5, 0x06C5, 0x06C9, 0x06C9,
    0x06D0, 0x06D0, 0x06D0, 0x06D0, 0x0649, 0x0649, 0x064A, 0x0654,
    0x0627, 0x064A, 0x0654, 0x0627, 0x064A, 0x0654, 0x06D5, 0x064A,
    0x0654, 0x06D5, 0x064A, 0x0654, 0x0648, 0x064A, 0x0654, 0x0648,
    0x064A, 0x0654, 0x06C7, 0x064A, 0x0654, 0x06C7, 0x064A, 0x0654,
    0x06C6, 0x064A, 0x0654, 0x06C6, 0x064A, 0x0654, 0x06C8, 0x064A,
    0x0654, 0x06C8, 0x064A, 0x0654, 0x06D0, 0x064A, 0x0654, 0x06D0,
    0x064A, 0x0654, 0x06D0, 0x064A, 0x0654, 0x0649, 0x064A, 0x0654,
    0x0649, 0x064A, 0x0654, 0x0649, 0x06CC, 0x06CC, 0x06CC, 0x06CC,
    0x064A, 0x0654, 0x062C, 0x064A, 0x0654, 0x062D, 0x064A, 0x0654,
    0x0645, 0x064A, 0x0654, 0x0649, 0x064A, 0x0654, 0x064A, 0x0628,
    0x062C, 0x0628, 0x062D, 0x0628, 0x062E, 0x0628, 0x0645, 0x0628,
    0x0649, 0x0628, 0x064A, 0x062A, 0x062C, 0x062A, 0x062D, 0x062A,
    0x062E, 0x062A, 0x0645, 0x062A, 0x0649, 0x062A, 0x064A, 0x062B,
    0x062C, 0x062B, 0x0645, 0x062B, 0x0649, 0x062B, 0x064A, 0x062C,
    0x062D, 0x062C, 0x0645, 0x062D, 0x062C, 0x062D, 0x0645, 0x062E,
    0x062C, 0x062E, 0x062D, 0x062E, 0x0645, 0x0633, 0x062C, 0x0633,
    0x062D, 0x0633, 0x062E, 0x0633, 0x0645, 0x0635, 0x062D, 0x0635,
    0x0645, 0x0636, 0x062C, 0x0636, 0x062D, 0x0636, 0x062E, 0x0636,
    0x0645, 0x0637, 0x062D, 0x0637, 0x0645, 0x0638, 0x0645, 0x0639,
    0x062C, 0x0639, 0x0645, 0x063A, 0x062C, 0x063A, 0x0645, 0x0641,
    0x062C, 0x0641, 0x062D, 0x0641, 0x062E, 0x0641, 0x0645, 0x0641,
    0x0649, 0x0641, 0x064A, 0x0642, 0x062D, 0x0642, 0x0645, 0x0642,
    0x0649, 0x0642, 0x064A, 0x0643, 0x0627, 0x0643, 0x062C, 0x0643,
    0x062D, 0x0643, 0x062E, 0x0643, 0x0644, 0x0643, 0x0645, 0x0643,
    0x0649, 0x0643, 0x064A, 0x0644, 0x062C, 0x0644, 0x062D, 0x0644,
    0x062E, 0x0644, 0x0645, 0x0644, 0x0649, 0x0644, 0x064A, 0x0645,
    0x062C, 0x0645, 0x062D, 0x0645, 0x062E, 0x0645, 0x0645, 0x0645,
    0x0649, 0x0645, 0x064A, 0x0646, 0x062C, 0x0646, 0x062D, 0x0646,
    0x062E, 0x0646, 0x0645, 0x0646, 0x0649, 0x0646, 0x064A, 0x0647,
    0x062C, 0x0647, 0x0645, 0x0647, 0x0649, 0x0647, 0x064A, 0x064A,
    0x062C, 0x064A, 0x062D, 0x064A, 0x062E, 0x064A, 0x0645, 0x064A,
    0x0649, 0x064A, 0x064A, 0x0630, 0x0670, 0x0631, 0x0670, 0x0649,
    0x0670, 0x0020, 0x064C, 0x0651, 0x0020, 0x064D, 0x0651, 0x0020,
    0x064E, 0x0651, 0x0020, 0x064F, 0x0651, 0x0020, 0x0650, 0x0651,
    0x0020, 0x0651, 0x0670, 0x064A, 0x0654, 0x0631, 0x064A, 0x0654,
    0x0632, 0x064A, 0x0654, 0x0645, 0x064A, 0x0654, 0x0646, 0x064A,
    0x0654, 0x0649, 0x064A, 0x0654, 0x064A, 0x0628, 0x0631, 0x0628,
    0x0632, 0x0628, 0x0645, 0x0628, 0x0646, 0x0628, 0x0649, 0x0628,
    0x064A, 0x062A, 0x0631, 0x062A, 0x0632, 0x062A, 0x0645, 0x062A,
    0x0646, 0x062A, 0x0649, 0x062A, 0x064A, 0x062B, 0x0631, 0x062B,
    0x0632, 0x062B, 0x0645, 0x062B, 0x0646, 0x062B, 0x0649, 0x062B,
    0x064A, 0x0641, 0x0649, 0x0641, 0x064A, 0x0642, 0x0649, 0x0642,
    0x064A, 0x0643, 0x0627, 0x0643, 0x0644, 0x0643, 0x0645, 0x0643,
    0x0649, 0x0643, 0x064A, 0x0644, 0x0645, 0x0644, 0x0649, 0x0644,
    0x064A, 0x0645, 0x0627, 0x0645, 0x0645, 0x0646, 0x0631, 0x0646,
    0x0632, 0x0646, 0x0645, 0x0646, 0x0646, 0x0646, 0x0649, 0x0646,
    0x064A, 0x0649, 0x0670, 0x064A, 0x0631, 0x064A, 0x0632, 0x064A,
    0x0645, 0x064A, 0x0646, 0x064A, 0x0649, 0x064A, 0x064A, 0x064A,
    0x0654, 0x062C, 0x064A, 0x0654, 0x062D, 0x064A, 0x0654, 0x062E,
    0x064A, 0x0654, 0x0645, 0x064A, 0x0654, 0x0647, 0x0628, 0x062C,
    0x0628, 0x062D, 0x0628, 0x062E, 0x0628, 0x0645, 0x0628, 0x0647,
    0x062A, 0x062C, 0x062A, 0x062D, 0x062A, 0x062E, 0x062A, 0x0645,
    0x062A, 0x0647, 0x062B, 0x0645, 0x062C, 0x062D, 0x062C, 0x0645,
    0x062D, 0x062C, 0x062D, 0x0645, 0x062E, 0x062C, 0x062E, 0x0645,
    0x0633, 0x062C, 0x0633, 0x062D, 0x0633, 0x062E, 0x0633, 0x0645,
    0x0635, 0x062D, 0x0635, 0x062E, 0x0635, 0x0645, 0x0636, 0x062C,
    0x0636, 0x062D, 0x0636, 0x062E, 0x0636, 0x0645, 0x0637, 0x062D,
    0x0638, 0x0645, 0x0639, 0x062C, 0x0639, 0x0645, 0x063A, 0x062C,
    0x063A, 0x0645, 0x0641, 0x062C, 0x0641, 0x062D, 0x0641, 0x062E,
    0x0641, 0x0645, 0x0642, 0x062D, 0x0642, 0x0645, 0x0643, 0x062C,
    0x0643, 0x062D, 0x0643, 0x062E, 0x0643, 0x0644, 0x0643, 0x0645,
    0x0644, 0x062C, 0x0644, 0x062D, 0x0644, 0x062E, 0x0644, 0x0645,
    0x0644, 0x0647, 0x0645, 0x062C, 0x0645, 0x062D, 0x0645, 0x062E,
    0x0645, 0x0645, 0x0646, 0x062C, 0x0646, 0x062D, 0x0646, 0x062E,
    0x0646, 0x0645, 0x0646, 0x0647, 0x0647, 0x062C, 0x0647, 0x0645,
    0x0647, 0x0670, 0x064A, 0x062C, 0x064A, 0x062D, 0x064A, 0x062E,
    0x064A, 0x0645, 0x064A, 0x0647, 0x064A, 0x0654, 0x0645, 0x064A,
    0x0654, 0x0647, 0x0628, 0x0645, 0x0628, 0x0647, 0x062A, 0x0645,
    0x062A, 0x0647, 0x062B, 0x0645, 0x062B, 0x0647, 0x0633, 0x0645,
    0x0633, 0x0647, 0x0634, 0x0645, 0x0634, 0x0647, 0x0643, 0x0644,
    0x0643, 0x0645, 0x0644, 0x0645, 0x0646, 0x0645, 0x0646, 0x0647,
    0x064A, 0x0645, 0x064A, 0x0647, 0x0640, 0x064E, 0x0651, 0x0640,
    0x064F, 0x0651, 0x0640, 0x0650, 0x0651, 0x0637, 0x0649, 0x0637,
    0x064A, 0x0639, 0x0649, 0x0639, 0x064A, 0x063A, 0x0649, 0x063A,
    0x064A, 0x0633, 0x0649, 0x0633, 0x064A, 0x0634, 0x0649, 0x0634,
    0x064A, 0x062D, 0x0649, 0x062D, 0x064A, 0x062C, 0x0649, 0x062C,
    0x064A, 0x062E, 0x0649, 0x062E, 0x064A, 0x0635, 0x0649, 0x0635,
    0x064A, 0x0636, 0x0649, 0x0636, 0x064A, 0x0634, 0x062C, 0x0634,
    0x062D, 0x0634, 0x062E, 0x0634, 0x0645, 0x0634, 0x0631, 0x0633,
    0x0631, 0x0635, 0x0631, 0x0636, 0x0631, 0x0637, 0x0649, 0x0637,
    0x064A, 0x0639, 0x0649, 0x0639, 0x064A, 0x063A, 0x0649, 0x063A,
    0x064A, 0x0633, 0x0649, 0x0633, 0x064A, 0x0634, 0x0649, 0x0634,
    0x064A, 0x062D, 0x0649, 0x062D, 0x064A, 0x062C, 0x0649, 0x062C,
    0x064A, 0x062E, 0x0649, 0x062E, 0x064A, 0x0635, 0x0649, 0x0635,
    0x064A, 0x0636, 0x0649, 0x0636, 0x064A, 0x0634, 0x062C, 0x0634,
    0x062D, 0x0634, 0x062E, 0x0634, 0x0645, 0x0634, 0x0631, 0x0633,
    0x0631, 0x0635, 0x0631, 0x0636, 0x0631, 0x0634, 0x062C, 0x0634,
    0x062D, 0x0634, 0x062E, 0x0634, 0x0645, 0x0633, 0x0647, 0x0634,
    0x0647, 0x0637, 0x0645, 0x0633, 0x062C, 0x0633, 0x062D, 0x0633,
    0x062E, 0x0634, 0x062C, 0x0634, 0x062D, 0x0634, 0x062E, 0x0637,
    0x0645, 0x0638, 0x0645, 0x0627, 0x064B, 0x0627, 0x064B, 0x062A,
    0x062C, 0x0645, 0x062A, 0x062D, 0x062C, 0x062A, 0x062D, 0x062C,
    0x062A, 0x062D, 0x0645, 0x062A, 0x062E, 0x0645, 0x062A, 0x0645,
    0x062C, 0x062A, 0x0645, 0x062D, 0x062A, 0x0645, 0x062E, 0x062C,
    0x0645, 0x062D, 0x062C, 0x0645, 0x062D, 0x062D, 0x0645, 0x064A,
    0x062D, 0x0645, 0x0649, 0x0633, 0x062D, 0x062C, 0x0633, 0x062C,
    0x062D, 0x0633, 0x062C, 0x0649, 0x0633, 0x0645, 0x062D, 0x0633,
    0x0645, 0x062D, 0x0633, 0x0645, 0x062C, 0x0633, 0x0645, 0x0645,
    0x0633, 0x0645, 0x0645, 0x0635, 0x062D, 0x062D, 0x0635, 0x062D,
    0x062D, 0x0635, 0x0645, 0x0645, 0x0634, 0x062D, 0x0645, 0x0634,
    0x062D, 0x0645, 0x0634, 0x062C, 0x064A, 0x0634, 0x0645, 0x062E,
    0x0634, 0x0645, 0x062E, 0x0634, 0x0645, 0x0645, 0x0634, 0x0645,
    0x0645, 0x0636, 0x062D, 0x0649, 0x0636, 0x062E, 0x0645, 0x0636,
    0x062E, 0x0645, 0x0637, 0x0645, 0x062D, 0x0637, 0x0645, 0x062D,
    0x0637, 0x0645, 0x0645, 0x0637, 0x0645, 0x064A, 0x0639, 0x062C,
    0x0645, 0x0639, 0x0645, 0x0645, 0x0639, 0x0645, 0x0645, 0x0639,
    0x0645, 0x0649, 0x063A, 0x0645, 0x0645, 0x063A, 0x0645, 0x064A,
    0x063A, 0x0645, 0x0649, 0x0641, 0x062E, 0x0645, 0x0641, 0x062E,
    0x0645, 0x0642, 0x0645, 0x062D, 0x0642, 0x0645, 0x0645, 0x0644,
    0x062D, 0x0645, 0x0644, 0x062D, 0x064A, 0x0644, 0x062D, 0x0649,
    0x0644, 0x062C, 0x062C, 0x0644, 0x062C, 0x062C, 0x0644, 0x062E,
    0x0645, 0x0644, 0x062E, 0x0645, 0x0644, 0x0645, 0x062D, 0x0644,
    0x0645, 0x062D, 0x0645, 0x062D, 0x062C, 0x0645, 0x062D, 0x0645,
    0x0645, 0x062D, 0x064A, 0x0645, 0x062C, 0x062D, 0x0645, 0x062C,
    0x0645, 0x0645, 0x062E, 0x062C, 0x0645, 0x062E, 0x0645, 0x0645,
    0x062C, 0x062E, 0x0647, 0x0645, 0x062C, 0x0647, 0x0645, 0x0645,
    0x0646, 0x062D, 0x0645, 0x0646, 0x062D, 0x0649, 0x0646, 0x062C,
    0x0645, 0x0646, 0x062C, 0x0645, 0x0646, 0x062C, 0x0649, 0x0646,
    0x0645, 0x064A, 0x0646, 0x0645, 0x0649, 0x064A, 0x0645, 0x0645,
    0x064A, 0x0645, 0x0645, 0x0628, 0x062E, 0x064A, 0x062A, 0x062C,
    0x064A, 0x062A, 0x062C, 0x0649, 0x062A, 0x062E, 0x064A, 0x062A,
    0x062E, 0x0649, 0x062A, 0x0645, 0x064A, 0x062A, 0x0645, 0x0649,
    0x062C, 0x0645, 0x064A, 0x062C, 0x062D, 0x0649, 0x062C, 0x0645,
    0x0649, 0x0633, 0x062E, 0x0649, 0x0635, 0x062D, 0x064A, 0x0634,
    0x062D, 0x064A, 0x0636, 0x062D, 0x064A, 0x0644, 0x062C, 0x064A,
    0x0644, 0x0645, 0x064A, 0x064A, 0x062D, 0x064A, 0x064A, 0x062C,
    0x064A, 0x064A, 0x0645, 0x064A, 0x0645, 0x0645, 0x064A, 0x0642,
    0x0645, 0x064A, 0x0646, 0x062D, 0x064A, 0x0642, 0x0645, 0x062D,
    0x0644, 0x062D, 0x0645, 0x0639, 0x0645, 0x064A, 0x0643, 0x0645,
    0x064A, 0x0646, 0x062C, 0x062D, 0x0645, 0x062E, 0x064A, 0x0644,
    0x062C, 0x0645, 0x0643, 0x0645, 0x0645, 0x0644, 0x062C, 0x0645,
    0x0646, 0x062C, 0x062D, 0x062C, 0x062D, 0x064A, 0x062D, 0x062C,
    0x064A, 0x0645, 0x062C, 0x064A, 0x0641, 0x0645, 0x064A, 0x0628,
    0x062D, 0x064A, 0x0643, 0x0645, 0x0645, 0x0639, 0x062C, 0x0645,
    0x0635, 0x0645, 0x0645, 0x0633, 0x062E, 0x064A, 0x0646, 0x062C,
    0x064A, 0x0635, 0x0644, 0x06D2, 0x0642, 0x0644, 0x06D2, 0x0627,
    0x0644, 0x0644, 0x0647, 0x0627, 0x0643, 0x0628, 0x0631, 0x0645,
    0x062D, 0x0645, 0x062F, 0x0635, 0x0644, 0x0639, 0x0645, 0x0631,
    0x0633, 0x0648, 0x0644, 0x0639, 0x0644, 0x064A, 0x0647, 0x0648,
    0x0633, 0x0644, 0x0645, 0x0635, 0x0644, 0x0649, 0x0635, 0x0644,
    0x0649, 0x0020, 0x0627, 0x0644, 0x0644, 0x0647, 0x0020, 0x0639,
    0x0644, 0x064A, 0x0647, 0x0020, 0x0648, 0x0633, 0x0644, 0x0645,
    0x062C, 0x0644, 0x0020, 0x062C, 0x0644, 0x0627, 0x0644, 0x0647,
    0x0631, 0x06CC, 0x0627, 0x0644, 0x0020, 0x064B, 0x0640, 0x064B,
    0x0020, 0x064C, 0x0020, 0x064D, 0x0020, 0x064E, 0x0640, 0x064E,
    0x0020, 0x064F, 0x0640, 0x064F, 0x0020, 0x0650, 0x0640, 0x0650,
    0x0020, 0x0651, 0x0640, 0x0651, 0x0020, 0x0652, 0x0640, 0x0652,
    0x0621, 0x0627, 0x0653, 0x0627, 0x0653, 0x0627, 0x0654, 0x0627,
    0x0654, 0x0648, 0x0654, 0x0648, 0x0654, 0x0627, 0x0655, 0x0627,
    0x0655, 0x064A, 0x0654, 0x064A, 0x0654, 0x064A, 0x0654, 0x064A,
    0x0654, 0x0627, 0x0627, 0x0628, 0x0628, 0x0628, 0x0628, 0x0629,
    0x0629, 0x062A, 0x062A, 0x062A, 0x062A, 0x062B, 0x062B, 0x062B,
    0x062B, 0x062C, 0x062C, 0x062C, 0x062C, 0x062D, 0x062D, 0x062D,
    0x062D, 0x062E, 0x062E, 0x062E, 0x062E, 0x062F, 0x062F, 0x0630,
    0x0630, 0x0631, 0x0631, 0x0632, 0x0632, 0x0633, 0x0633, 0x0633,
    0x0633, 0x0634, 0x0634, 0x0634, 0x0634, 0x0635, 0x0635, 0x0635,
    0x0635, 0x0636, 0x0636, 0x0636, 0x0636, 0x0637, 0x0637, 0x0637,
    0x0637, 0x0638, 0x0638, 0x0638, 0x0638, 0x0639, 0x0639, 0x0639,
    0x0639, 0x063A, 0x063A, 0x063A, 0x063A, 0x0641, 0x0641, 0x0641,
    0x0641, 0x0642, 0x0642, 0x0642, 0x0642, 0x0643, 0x0643, 0x0643,
    0x0643, 0x0644, 0x0644, 0x0644, 0x0644, 0x0645, 0x0645, 0x0645,
    0x0645, 0x0646, 0x0646, 0x0646, 0x0646, 0x0647, 0x0647, 0x0647,
    0x0647, 0x0648, 0x0648, 0x0649, 0x0649, 0x064A, 0x064A, 0x064A,
    0x064A, 0x0644, 0x0627, 0x0653, 0x0644, 0x0627, 0x0653, 0x0644,
    0x0627, 0x0654, 0x0644, 0x0627, 0x0654, 0x0644, 0x0627, 0x0655,
    0x0644, 0x0627, 0x0655, 0x0644, 0x0627, 0x0644, 0x0627,
};
const std::size_t kDecompPoolSize = 1447;

const Decomp kPresentationDecomps[] = {
    {0xFB50, 0, 1},
    {0xFB51, 1, 1},
    {0xFB52, 2, 1},
    {0xFB53, 3, 1},
    {0xFB54, 4, 1},
    {0xFB55, 5, 1},
    {0xFB56, 6, 1},
    {0xFB57, 7, 1},
    {0xFB58, 8, 1},
    {0xFB59, 9, 1},
    {0xFB5A, 10, 1},
    {0xFB5B, 11, 1},
    {0xFB5C, 12, 1},
    {0xFB5D, 13, 1},
    {0xFB5E, 14, 1},
    {0xFB5F, 15, 1},
    {0xFB60, 16, 1},
    {0xFB61, 17, 1},
    {0xFB62, 18, 1},
    {0xFB63, 19, 1},
    {0xFB64, 20, 1},
    {0xFB65, 21, 1},
    {0xFB66, 22, 1},
    {0xFB67, 23, 1},
    {0xFB68, 24, 1},
    {0xFB69, 25, 1},
    {0xFB6A, 26, 1},
    {0xFB6B, 27, 1},
    {0xFB6C, 28, 1},
    {0xFB6D, 29, 1},
    {0xFB6E, 30, 1},
    {0xFB6F, 31, 1},
    {0xFB70, 32, 1},
    {0xFB71, 33, 1},
    {0xFB72, 34, 1},
    {0xFB73, 35, 1},
    {0xFB74, 36, 1},
    {0xFB75, 37, 1},
    {0xFB76, 38, 1},
    {0xFB77, 39, 1},
    {0xFB78, 40, 1},
    {0xFB79, 41, 1},
    {0xFB7A, 42, 1},
    {0xFB7B, 43, 1},
    {0xFB7C, 44, 1},
    {0xFB7D, 45, 1},
    {0xFB7E, 46, 1},
    {0xFB7F, 47, 1},
    {0xFB80, 48, 1},
    {0xFB81, 49, 1},
    {0xFB82, 50, 1},
    {0xFB83, 51, 1},
    {0xFB84, 52, 1},
    {0xFB85, 53, 1},
    {0xFB86, 54, 1},
    {0xFB87, 55, 1},
    {0xFB88, 56, 1},
    {0xFB89, 57, 1},
    {0xFB8A, 58, 1},
    {0xFB8B, 59, 1},
    {0xFB8C, 60, 1},
    {0xFB8D, 61, 1},
    {0xFB8E, 62, 1},
    {0xFB8F, 63, 1},
    {0xFB90, 64, 1},
    {0xFB91, 65, 1},
    {0xFB92, 66, 1},
    {0xFB93, 67, 1},
    {0xFB94, 68, 1},
    {0xFB95, 69, 1},
    {0xFB96, 70, 1},
    {0xFB97, 71, 1},
    {0xFB98, 72, 1},
    {0xFB99, 73, 1},
    {0xFB9A, 74, 1},
    {0xFB9B, 75, 1},
    {0xFB9C, 76, 1},
    {0xFB9D, 77, 1},
    {0xFB9E, 78, 1},
    {0xFB9F, 79, 1},
    {0xFBA0, 80, 1},
    {0xFBA1, 81, 1},
    {0xFBA2, 82, 1},
    {0xFBA3, 83, 1},
    {0xFBA4, 84, 2},
    {0xFBA5, 86, 2},
    {0xFBA6, 88, 1},
    {0xFBA7, 89, 1},
    {0xFBA8, 90, 1},
    {0xFBA9, 91, 1},
    {0xFBAA, 92, 1},
    {0xFBAB, 93, 1},
    {0xFBAC, 94, 1},
    {0xFBAD, 95, 1},
    {0xFBAE, 96, 1},
    {0xFBAF, 97, 1},
    {0xFBB0, 98, 2},
    {0xFBB1, 100, 2},
    {0xFBD3, 102, 1},
    {0xFBD4, 103, 1},
    {0xFBD5, 104, 1},
    {0xFBD6, 105, 1},
    {0xFBD7, 106, 1},
    {0xFBD8, 107, 1},
    {0xFBD9, 108, 1},
    {0xFBDA, 109, 1},
    {0xFBDB, 110, 1},
    {0xFBDC, 111, 1},
    {0xFBDD, 112, 2},
    {0xFBDE, 114, 1},
    {0xFBDF, 115, 1},
    {0xFBE0, 116, 1},
    {0xFBE1, 117, 1},
    {0xFBE2, 118, 1},
    {0xFBE3, 119, 1},
    {0xFBE4, 120, 1},
    {0xFBE5, 121, 1},
    {0xFBE6, 122, 1},
    {0xFBE7, 123, 1},
    {0xFBE8, 124, 1},
    {0xFBE9, 125, 1},
    {0xFBEA, 126, 3},
    {0xFBEB, 129, 3},
    {0xFBEC, 132, 3},
    {0xFBED, 135, 3},
    {0xFBEE, 138, 3},
    {0xFBEF, 141, 3},
    {0xFBF0, 144, 3},
    {0xFBF1, 147, 3},
    {0xFBF2, 150, 3},
    {0xFBF3, 153, 3},
    {0xFBF4, 156, 3},
    {0xFBF5, 159, 3},
    {0xFBF6, 162, 3},
    {0xFBF7, 165, 3},
    {0xFBF8, 168, 3},
    {0xFBF9, 171, 3},
    {0xFBFA, 174, 3},
    {0xFBFB, 177, 3},
    {0xFBFC, 180, 1},
    {0xFBFD, 181, 1},
    {0xFBFE, 182, 1},
    {0xFBFF, 183, 1},
    {0xFC00, 184, 3},
    {0xFC01, 187, 3},
    {0xFC02, 190, 3},
    {0xFC03, 193, 3},
    {0xFC04, 196, 3},
    {0xFC05, 199, 2},
    {0xFC06, 201, 2},
    {0xFC07, 203, 2},
    {0xFC08, 205, 2},
    {0xFC09, 207, 2},
    {0xFC0A, 209, 2},
    {0xFC0B, 211, 2},
    {0xFC0C, 213, 2},
    {0xFC0D, 215, 2},
    {0xFC0E, 217, 2},
    {0xFC0F, 219, 2},
    {0xFC10, 221, 2},
    {0xFC11, 223, 2},
    {0xFC12, 225, 2},
    {0xFC13, 227, 2},
    {0xFC14, 229, 2},
    {0xFC15, 231, 2},
    {0xFC16, 233, 2},
    {0xFC17, 235, 2},
    {0xFC18, 237, 2},
    {0xFC19, 239, 2},
    {0xFC1A, 241, 2},
    {0xFC1B, 243, 2},
    {0xFC1C, 245, 2},
    {0xFC1D, 247, 2},
    {0xFC1E, 249, 2},
    {0xFC1F, 251, 2},
    {0xFC20, 253, 2},
    {0xFC21, 255, 2},
    {0xFC22, 257, 2},
    {0xFC23, 259, 2},
    {0xFC24, 261, 2},
    {0xFC25, 263, 2},
    {0xFC26, 265, 2},
    {0xFC27, 267, 2},
    {0xFC28, 269, 2},
    {0xFC29, 271, 2},
    {0xFC2A, 273, 2},
    {0xFC2B, 275, 2},
    {0xFC2C, 277, 2},
    {0xFC2D, 279, 2},
    {0xFC2E, 281, 2},
    {0xFC2F, 283, 2},
    {0xFC30, 285, 2},
    {0xFC31, 287, 2},
    {0xFC32, 289, 2},
    {0xFC33, 291, 2},
    {0xFC34, 293, 2},
    {0xFC35, 295, 2},
    {0xFC36, 297, 2},
    {0xFC37, 299, 2},
    {0xFC38, 301, 2},
    {0xFC39, 303, 2},
    {0xFC3A, 305, 2},
    {0xFC3B, 307, 2},
    {0xFC3C, 309, 2},
    {0xFC3D, 311, 2},
    {0xFC3E, 313, 2},
    {0xFC3F, 315, 2},
    {0xFC40, 317, 2},
    {0xFC41, 319, 2},
    {0xFC42, 321, 2},
    {0xFC43, 323, 2},
    {0xFC44, 325, 2},
    {0xFC45, 327, 2},
    {0xFC46, 329, 2},
    {0xFC47, 331, 2},
    {0xFC48, 333, 2},
    {0xFC49, 335, 2},
    {0xFC4A, 337, 2},
    {0xFC4B, 339, 2},
    {0xFC4C, 341, 2},
    {0xFC4D, 343, 2},
    {0xFC4E, 345, 2},
    {0xFC4F, 347, 2},
    {0xFC50, 349, 2},
    {0xFC51, 351, 2},
    {0xFC52, 353, 2},
    {0xFC53, 355, 2},
    {0xFC54, 357, 2},
    {0xFC55, 359, 2},
    {0xFC56, 361, 2},
    {0xFC57, 363, 2},
    {0xFC58, 365, 2},
    {0xFC59, 367, 2},
    {0xFC5A, 369, 2},
    {0xFC5B, 371, 2},
    {0xFC5C, 373, 2},
    {0xFC5D, 375, 2},
    {0xFC5E, 377, 3},
    {0xFC5F, 380, 3},
    {0xFC60, 383, 3},
    {0xFC61, 386, 3},
    {0xFC62, 389, 3},
    {0xFC63, 392, 3},
    {0xFC64, 395, 3},
    {0xFC65, 398, 3},
    {0xFC66, 401, 3},
    {0xFC67, 404, 3},
    {0xFC68, 407, 3},
    {0xFC69, 410, 3},
    {0xFC6A, 413, 2},
    {0xFC6B, 415, 2},
    {0xFC6C, 417, 2},
    {0xFC6D, 419, 2},
    {0xFC6E, 421, 2},
    {0xFC6F, 423, 2},
    {0xFC70, 425, 2},
    {0xFC71, 427, 2},
    {0xFC72, 429, 2},
    {0xFC73, 431, 2},
    {0xFC74, 433, 2},
    {0xFC75, 435, 2},
    {0xFC76, 437, 2},
    {0xFC77, 439, 2},
    {0xFC78, 441, 2},
    {0xFC79, 443, 2},
    {0xFC7A, 445, 2},
    {0xFC7B, 447, 2},
    {0xFC7C, 449, 2},
    {0xFC7D, 451, 2},
    {0xFC7E, 453, 2},
    {0xFC7F, 455, 2},
    {0xFC80, 457, 2},
    {0xFC81, 459, 2},
    {0xFC82, 461, 2},
    {0xFC83, 463, 2},
    {0xFC84, 465, 2},
    {0xFC85, 467, 2},
    {0xFC86, 469, 2},
    {0xFC87, 471, 2},
    {0xFC88, 473, 2},
    {0xFC89, 475, 2},
    {0xFC8A, 477, 2},
    {0xFC8B, 479, 2},
    {0xFC8C, 481, 2},
    {0xFC8D, 483, 2},
    {0xFC8E, 485, 2},
    {0xFC8F, 487, 2},
    {0xFC90, 489, 2},
    {0xFC91, 491, 2},
    {0xFC92, 493, 2},
    {0xFC93, 495, 2},
    {0xFC94, 497, 2},
    {0xFC95, 499, 2},
    {0xFC96, 501, 2},
    {0xFC97, 503, 3},
    {0xFC98, 506, 3},
    {0xFC99, 509, 3},
    {0xFC9A, 512, 3},
    {0xFC9B, 515, 3},
    {0xFC9C, 518, 2},
    {0xFC9D, 520, 2},
    {0xFC9E, 522, 2},
    {0xFC9F, 524, 2},
    {0xFCA0, 526, 2},
    {0xFCA1, 528, 2},
    {0xFCA2, 530, 2},
    {0xFCA3, 532, 2},
    {0xFCA4, 534, 2},
    {0xFCA5, 536, 2},
    {0xFCA6, 538, 2},
    {0xFCA7, 540, 2},
    {0xFCA8, 542, 2},
    {0xFCA9, 544, 2},
    {0xFCAA, 546, 2},
    {0xFCAB, 548, 2},
    {0xFCAC, 550, 2},
    {0xFCAD, 552, 2},
    {0xFCAE, 554, 2},
    {0xFCAF, 556, 2},
    {0xFCB0, 558, 2},
    {0xFCB1, 560, 2},
    {0xFCB2, 562, 2},
    {0xFCB3, 564, 2},
    {0xFCB4, 566, 2},
    {0xFCB5, 568, 2},
    {0xFCB6, 570, 2},
    {0xFCB7, 572, 2},
    {0xFCB8, 574, 2},
    {0xFCB9, 576, 2},
    {0xFCBA, 578, 2},
    {0xFCBB, 580, 2},
    {0xFCBC, 582, 2},
    {0xFCBD, 584, 2},
    {0xFCBE, 586, 2},
    {0xFCBF, 588, 2},
    {0xFCC0, 590, 2},
    {0xFCC1, 592, 2},
    {0xFCC2, 594, 2},
    {0xFCC3, 596, 2},
    {0xFCC4, 598, 2},
    {0xFCC5, 600, 2},
    {0xFCC6, 602, 2},
    {0xFCC7, 604, 2},
    {0xFCC8, 606, 2},
    {0xFCC9, 608, 2},
    {0xFCCA, 610, 2},
    {0xFCCB, 612, 2},
    {0xFCCC, 614, 2},
    {0xFCCD, 616, 2},
    {0xFCCE, 618, 2},
    {0xFCCF, 620, 2},
    {0xFCD0, 622, 2},
    {0xFCD1, 624, 2},
    {0xFCD2, 626, 2},
    {0xFCD3, 628, 2},
    {0xFCD4, 630, 2},
    {0xFCD5, 632, 2},
    {0xFCD6, 634, 2},
    {0xFCD7, 636, 2},
    {0xFCD8, 638, 2},
    {0xFCD9, 640, 2},
    {0xFCDA, 642, 2},
    {0xFCDB, 644, 2},
    {0xFCDC, 646, 2},
    {0xFCDD, 648, 2},
    {0xFCDE, 650, 2},
    {0xFCDF, 652, 3},
    {0xFCE0, 655, 3},
    {0xFCE1, 658, 2},
    {0xFCE2, 660, 2},
    {0xFCE3, 662, 2},
    {0xFCE4, 664, 2},
    {0xFCE5, 666, 2},
    {0xFCE6, 668, 2},
    {0xFCE7, 670, 2},
    {0xFCE8, 672, 2},
    {0xFCE9, 674, 2},
    {0xFCEA, 676, 2},
    {0xFCEB, 678, 2},
    {0xFCEC, 680, 2},
    {0xFCED, 682, 2},
    {0xFCEE, 684, 2},
    {0xFCEF, 686, 2},
    {0xFCF0, 688, 2},
    {0xFCF1, 690, 2},
    {0xFCF2, 692, 3},
    {0xFCF3, 695, 3},
    {0xFCF4, 698, 3},
    {0xFCF5, 701, 2},
    {0xFCF6, 703, 2},
    {0xFCF7, 705, 2},
    {0xFCF8, 707, 2},
    {0xFCF9, 709, 2},
    {0xFCFA, 711, 2},
    {0xFCFB, 713, 2},
    {0xFCFC, 715, 2},
    {0xFCFD, 717, 2},
    {0xFCFE, 719, 2},
    {0xFCFF, 721, 2},
    {0xFD00, 723, 2},
    {0xFD01, 725, 2},
    {0xFD02, 727, 2},
    {0xFD03, 729, 2},
    {0xFD04, 731, 2},
    {0xFD05, 733, 2},
    {0xFD06, 735, 2},
    {0xFD07, 737, 2},
    {0xFD08, 739, 2},
    {0xFD09, 741, 2},
    {0xFD0A, 743, 2},
    {0xFD0B, 745, 2},
    {0xFD0C, 747, 2},
    {0xFD0D, 749, 2},
    {0xFD0E, 751, 2},
    {0xFD0F, 753, 2},
    {0xFD10, 755, 2},
    {0xFD11, 757, 2},
    {0xFD12, 759, 2},
    {0xFD13, 761, 2},
    {0xFD14, 763, 2},
    {0xFD15, 765, 2},
    {0xFD16, 767, 2},
    {0xFD17, 769, 2},
    {0xFD18, 771, 2},
    {0xFD19, 773, 2},
    {0xFD1A, 775, 2},
    {0xFD1B, 777, 2},
    {0xFD1C, 779, 2},
    {0xFD1D, 781, 2},
    {0xFD1E, 783, 2},
    {0xFD1F, 785, 2},
    {0xFD20, 787, 2},
    {0xFD21, 789, 2},
    {0xFD22, 791, 2},
    {0xFD23, 793, 2},
    {0xFD24, 795, 2},
    {0xFD25, 797, 2},
    {0xFD26, 799, 2},
    {0xFD27, 801, 2},
    {0xFD28, 803, 2},
    {0xFD29, 805, 2},
    {0xFD2A, 807, 2},
    {0xFD2B, 809, 2},
    {0xFD2C, 811, 2},
    {0xFD2D, 813, 2},
    {0xFD2E, 815, 2},
    {0xFD2F, 817, 2},
    {0xFD30, 819, 2},
    {0xFD31, 821, 2},
    {0xFD32, 823, 2},
    {0xFD33, 825, 2},
    {0xFD34, 827, 2},
    {0xFD35, 829, 2},
    {0xFD36, 831, 2},
    {0xFD37, 833, 2},
    {0xFD38, 835, 2},
    {0xFD39, 837, 2},
    {0xFD3A, 839, 2},
    {0xFD3B, 841, 2},
    {0xFD3C, 843, 2},
    {0xFD3D, 845, 2},
    {0xFD50, 847, 3},
    {0xFD51, 850, 3},
    {0xFD52, 853, 3},
    {0xFD53, 856, 3},
    {0xFD54, 859, 3},
    {0xFD55, 862, 3},
    {0xFD56, 865, 3},
    {0xFD57, 868, 3},
    {0xFD58, 871, 3},
    {0xFD59, 874, 3},
    {0xFD5A, 877, 3},
    {0xFD5B, 880, 3},
    {0xFD5C, 883, 3},
    {0xFD5D, 886, 3},
    {0xFD5E, 889, 3},
    {0xFD5F, 892, 3},
    {0xFD60, 895, 3},
    {0xFD61, 898, 3},
    {0xFD62, 901, 3},
    {0xFD63, 904, 3},
    {0xFD64, 907, 3},
    {0xFD65, 910, 3},
    {0xFD66, 913, 3},
    {0xFD67, 916, 3},
    {0xFD68, 919, 3},
    {0xFD69, 922, 3},
    {0xFD6A, 925, 3},
    {0xFD6B, 928, 3},
    {0xFD6C, 931, 3},
    {0xFD6D, 934, 3},
    {0xFD6E, 937, 3},
    {0xFD6F, 940, 3},
    {0xFD70, 943, 3},
    {0xFD71, 946, 3},
    {0xFD72, 949, 3},
    {0xFD73, 952, 3},
    {0xFD74, 955, 3},
    {0xFD75, 958, 3},
    {0xFD76, 961, 3},
    {0xFD77, 964, 3},
    {0xFD78, 967, 3},
    {0xFD79, 970, 3},
    {0xFD7A, 973, 3},
    {0xFD7B, 976, 3},
    {0xFD7C, 979, 3},
    {0xFD7D, 982, 3},
    {0xFD7E, 985, 3},
    {0xFD7F, 988, 3},
    {0xFD80, 991, 3},
    {0xFD81, 994, 3},
    {0xFD82, 997, 3},
    {0xFD83, 1000, 3},
    {0xFD84, 1003, 3},
    {0xFD85, 1006, 3},
    {0xFD86, 1009, 3},
    {0xFD87, 1012, 3},
    {0xFD88, 1015, 3},
    {0xFD89, 1018, 3},
    {0xFD8A, 1021, 3},
    {0xFD8B, 1024, 3},
    {0xFD8C, 1027, 3},
    {0xFD8D, 1030, 3},
    {0xFD8E, 1033, 3},
    {0xFD8F, 1036, 3},
    {0xFD92, 1039, 3},
    {0xFD93, 1042, 3},
    {0xFD94, 1045, 3},
    {0xFD95, 1048, 3},
    {0xFD96, 1051, 3},
    {0xFD97, 1054, 3},
    {0xFD98, 1057, 3},
    {0xFD99, 1060, 3},
    {0xFD9A, 1063, 3},
    {0xFD9B, 1066, 3},
    {0xFD9C, 1069, 3},
    {0xFD9D, 1072, 3},
    {0xFD9E, 1075, 3},
    {0xFD9F, 1078, 3},
    {0xFDA0, 1081, 3},
    {0xFDA1, 1084, 3},
    {0xFDA2, 1087, 3},
    {0xFDA3, 1090, 3},
    {0xFDA4, 1093, 3},
    {0xFDA5, 1096, 3},
    {0xFDA6, 1099, 3},
    {0xFDA7, 1102, 3},
    {0xFDA8, 1105, 3},
    {0xFDA9, 1108, 3},
    {0xFDAA, 1111, 3},
    {0xFDAB, 1114, 3},
    {0xFDAC, 1117, 3},
    {0xFDAD, 1120, 3},
    {0xFDAE, 1123, 3},
    {0xFDAF, 1126, 3},
    {0xFDB0, 1129, 3},
    {0xFDB1, 1132, 3},
    {0xFDB2, 1135, 3},
    {0xFDB3, 1138, 3},
    {0xFDB4, 1141, 3},
    {0xFDB5, 1144, 3},
    {0xFDB6, 1147, 3},
    {0xFDB7, 1150, 3},
    {0xFDB8, 1153, 3},
    {0xFDB9, 1156, 3},
    {0xFDBA, 1159, 3},
    {0xFDBB, 1162, 3},
    {0xFDBC, 1165, 3},
    {0xFDBD, 1168, 3},
    {0xFDBE, 1171, 3},
    {0xFDBF, 1174, 3},
    {0xFDC0, 1177, 3},
    {0xFDC1, 1180, 3},
    {0xFDC2, 1183, 3},
    {0xFDC3, 1186, 3},
    {0xFDC4, 1189, 3},
    {0xFDC5, 1192, 3},
    {0xFDC6, 1195, 3},
    {0xFDC7, 1198, 3},
    {0xFDF0, 1201, 3},
    {0xFDF1, 1204, 3},
    {0xFDF2, 1207, 4},
    {0xFDF3, 1211, 4},
    {0xFDF4, 1215, 4},
    {0xFDF5, 1219, 4},
    {0xFDF6, 1223, 4},
    {0xFDF7, 1227, 4},
    {0xFDF8, 1231, 4},
    {0xFDF9, 1235, 3},
    {0xFDFA, 1238, 18},
    {0xFDFB, 1256, 8},
    {0xFDFC, 1264, 4},
    {0xFE70, 1268, 2},
    {0xFE71, 1270, 2},
    {0xFE72, 1272, 2},
    {0xFE74, 1274, 2},
    {0xFE76, 1276, 2},
    {0xFE77, 1278, 2},
    {0xFE78, 1280, 2},
    {0xFE79, 1282, 2},
    {0xFE7A, 1284, 2},
    {0xFE7B, 1286, 2},
    {0xFE7C, 1288, 2},
    {0xFE7D, 1290, 2},
    {0xFE7E, 1292, 2},
    {0xFE7F, 1294, 2},
    {0xFE80, 1296, 1},
    {0xFE81, 1297, 2},
    {0xFE82, 1299, 2},
    {0xFE83, 1301, 2},
    {0xFE84, 1303, 2},
    {0xFE85, 1305, 2},
    {0xFE86, 1307, 2},
    {0xFE87, 1309, 2},
    {0xFE88, 1311, 2},
    {0xFE89, 1313, 2},
    {0xFE8A, 1315, 2},
    {0xFE8B, 1317, 2},
    {0xFE8C, 1319, 2},
    {0xFE8D, 1321, 1},
    {0xFE8E, 1322, 1},
    {0xFE8F, 1323, 1},
    {0xFE90, 1324, 1},
    {0xFE91, 1325, 1},
    {0xFE92, 1326, 1},
    {0xFE93, 1327, 1},
    {0xFE94, 1328, 1},
    {0xFE95, 1329, 1},
    {0xFE96, 1330, 1},
    {0xFE97, 1331, 1},
    {0xFE98, 1332, 1},
    {0xFE99, 1333, 1},
    {0xFE9A, 1334, 1},
    {0xFE9B, 1335, 1},
    {0xFE9C, 1336, 1},
    {0xFE9D, 1337, 1},
    {0xFE9E, 1338, 1},
    {0xFE9F, 1339, 1},
    {0xFEA0, 1340, 1},
    {0xFEA1, 1341, 1},
    {0xFEA2, 1342, 1},
    {0xFEA3, 1343, 1},
    {0xFEA4, 1344, 1},
    {0xFEA5, 1345, 1},
    {0xFEA6, 1346, 1},
    {0xFEA7, 1347, 1},
    {0xFEA8, 1348, 1},
    {0xFEA9, 1349, 1},
    {0xFEAA, 1350, 1},
    {0xFEAB, 1351, 1},
    {0xFEAC, 1352, 1},
    {0xFEAD, 1353, 1},
    {0xFEAE, 1354, 1},
    {0xFEAF, 1355, 1},
    {0xFEB0, 1356, 1},
    {0xFEB1, 1357, 1},
    {0xFEB2, 1358, 1},
    {0xFEB3, 1359, 1},
    {0xFEB4, 1360, 1},
    {0xFEB5, 1361, 1},
    {0xFEB6, 1362, 1},
    {0xFEB7, 1363, 1},
    {0xFEB8, 1364, 1},
    {0xFEB9, 1365, 1},
    {0xFEBA, 1366, 1},
    {0xFEBB, 1367, 1},
    {0xFEBC, 1368, 1},
    {0xFEBD, 1369, 1},
    {0xFEBE, 1370, 1},
    {0xFEBF, 1371, 1},
    {0xFEC0, 1372, 1},
    {0xFEC1, 1373, 1},
    {0xFEC2, 1374, 1},
    {0xFEC3, 1375, 1},
    {0xFEC4, 1376, 1},
    {0xFEC5, 1377, 1},
    {0xFEC6, 1378, 1},
    {0xFEC7, 1379, 1},
    {0xFEC8, 1380, 1},
    {0xFEC9, 1381, 1},
    {0xFECA, 1382, 1},
    {0xFECB, 1383, 1},
    {0xFECC, 1384, 1},
    {0xFECD, 1385, 1},
    {0xFECE, 1386, 1},
    {0xFECF, 1387, 1},
    {0xFED0, 1388, 1},
    {0xFED1, 1389, 1},
    {0xFED2, 1390, 1},
    {0xFED3, 1391, 1},
    {0xFED4, 1392, 1},
    {0xFED5, 1393, 1},
    {0xFED6, 1394, 1},
    {0xFED7, 1395, 1},
    {0xFED8, 1396, 1},
    {0xFED9, 1397, 1},
    {0xFEDA, 1398, 1},
    {0xFEDB, 1399, 1},
    {0xFEDC, 1400, 1},
    {0xFEDD, 1401, 1},
    {0xFEDE, 1402, 1},
    {0xFEDF, 1403, 1},
    {0xFEE0, 1404, 1},
    {0xFEE1, 1405, 1},
    {0xFEE2, 1406, 1},
    {0xFEE3, 1407, 1},
    {0xFEE4, 1408, 1},
    {0xFEE5, 1409, 1},
    {0xFEE6, 1410, 1},
    {0xFEE7, 1411, 1},
    {0xFEE8, 1412, 1},
    {0xFEE9, 1413, 1},
    {0xFEEA, 1414, 1},
    {0xFEEB, 1415, 1},
    {0xFEEC, 1416, 1},
    {0xFEED, 1417, 1},
    {0xFEEE, 1418, 1},
    {0xFEEF, 1419, 1},
    {0xFEF0, 1420, 1},
    {0xFEF1, 1421, 1},
    {0xFEF2, 1422, 1},
    {0xFEF3, 1423, 1},
    {0xFEF4, 1424, 1},
    {0xFEF5, 1425, 3},
    {0xFEF6, 1428, 3},
    {0xFEF7, 1431, 3},
    {0xFEF8, 1434, 3},
    {0xFEF9, 1437, 3},
    {0xFEFA, 1440, 3},
    {0xFEFB, 1443, 2},
    {0xFEFC, 1445, 2},
};
const std::size_t kPresentationDecompCount = 731;

}  // namespace tashkeel::uni::tables
