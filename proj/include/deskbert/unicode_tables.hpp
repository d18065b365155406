// Generated by scripts/gen_unicode_tables.py -- do not edit.
// Unicode data version 13.0.0
#pragma once

#include <cstdint>

namespace deskbert::unicode_tables {

struct CpRange { uint32_t lo; uint32_t hi; };
struct FoldEntry { uint32_t cp; uint32_t offset; uint32_t length; };

inline constexpr CpRange kUnprintable[] = {
    {0x0, 0x8}, {0xB, 0x1F}, {0x7F, 0x9F}, {0xAD, 0xAD},
    {0x378, 0x379}, {0x380, 0x383}, {0x38B, 0x38B}, {0x38D, 0x38D},
    {0x3A2, 0x3A2}, {0x530, 0x530}, {0x557, 0x558}, {0x58B, 0x58C},
    {0x590, 0x590}, {0x5C8, 0x5CF}, {0x5EB, 0x5EE}, {0x5F5, 0x605},
    {0x61C, 0x61D}, {0x6DD, 0x6DD}, {0x70E, 0x70F}, {0x74B, 0x74C},
    {0x7B2, 0x7BF}, {0x7FB, 0x7FC}, {0x82E, 0x82F}, {0x83F, 0x83F},
    {0x85C, 0x85D}, {0x85F, 0x85F}, {0x86B, 0x89F}, {0x8B5, 0x8B5},
    {0x8C8, 0x8D2}, {0x8E2, 0x8E2}, {0x984, 0x984}, {0x98D, 0x98E},
    {0x991, 0x992}, {0x9A9, 0x9A9}, {0x9B1, 0x9B1}, {0x9B3, 0x9B5},
    {0x9BA, 0x9BB}, {0x9C5, 0x9C6}, {0x9C9, 0x9CA}, {0x9CF, 0x9D6},
    {0x9D8, 0x9DB}, {0x9DE, 0x9DE}, {0x9E4, 0x9E5}, {0x9FF, 0xA00},
    {0xA04, 0xA04}, {0xA0B, 0xA0E}, {0xA11, 0xA12}, {0xA29, 0xA29},
    {0xA31, 0xA31}, {0xA34, 0xA34}, {0xA37, 0xA37}, {0xA3A, 0xA3B},
    {0xA3D, 0xA3D}, {0xA43, 0xA46}, {0xA49, 0xA4A}, {0xA4E, 0xA50},
    {0xA52, 0xA58}, {0xA5D, 0xA5D}, {0xA5F, 0xA65}, {0xA77, 0xA80},
    {0xA84, 0xA84}, {0xA8E, 0xA8E}, {0xA92, 0xA92}, {0xAA9, 0xAA9},
    {0xAB1, 0xAB1}, {0xAB4, 0xAB4}, {0xABA, 0xABB}, {0xAC6, 0xAC6},
    {0xACA, 0xACA}, {0xACE, 0xACF}, {0xAD1, 0xADF}, {0xAE4, 0xAE5},
    {0xAF2, 0xAF8}, {0xB00, 0xB00}, {0xB04, 0xB04}, {0xB0D, 0xB0E},
    {0xB11, 0xB12}, {0xB29, 0xB29}, {0xB31, 0xB31}, {0xB34, 0xB34},
    {0xB3A, 0xB3B}, {0xB45, 0xB46}, {0xB49, 0xB4A}, {0xB4E, 0xB54},
    {0xB58, 0xB5B}, {0xB5E, 0xB5E}, {0xB64, 0xB65}, {0xB78, 0xB81},
    {0xB84, 0xB84}, {0xB8B, 0xB8D}, {0xB91, 0xB91}, {0xB96, 0xB98},
    {0xB9B, 0xB9B}, {0xB9D, 0xB9D}, {0xBA0, 0xBA2}, {0xBA5, 0xBA7},
    {0xBAB, 0xBAD}, {0xBBA, 0xBBD}, {0xBC3, 0xBC5}, {0xBC9, 0xBC9},
    {0xBCE, 0xBCF}, {0xBD1, 0xBD6}, {0xBD8, 0xBE5}, {0xBFB, 0xBFF},
    {0xC0D, 0xC0D}, {0xC11, 0xC11}, {0xC29, 0xC29}, {0xC3A, 0xC3C},
    {0xC45, 0xC45}, {0xC49, 0xC49}, {0xC4E, 0xC54}, {0xC57, 0xC57},
    {0xC5B, 0xC5F}, {0xC64, 0xC65}, {0xC70, 0xC76}, {0xC8D, 0xC8D},
    {0xC91, 0xC91}, {0xCA9, 0xCA9}, {0xCB4, 0xCB4}, {0xCBA, 0xCBB},
    {0xCC5, 0xCC5}, {0xCC9, 0xCC9}, {0xCCE, 0xCD4}, {0xCD7, 0xCDD},
    {0xCDF, 0xCDF}, {0xCE4, 0xCE5}, {0xCF0, 0xCF0}, {0xCF3, 0xCFF},
    {0xD0D, 0xD0D}, {0xD11, 0xD11}, {0xD45, 0xD45}, {0xD49, 0xD49},
    {0xD50, 0xD53}, {0xD64, 0xD65}, {0xD80, 0xD80}, {0xD84, 0xD84},
    {0xD97, 0xD99}, {0xDB2, 0xDB2}, {0xDBC, 0xDBC}, {0xDBE, 0xDBF},
    {0xDC7, 0xDC9}, {0xDCB, 0xDCE}, {0xDD5, 0xDD5}, {0xDD7, 0xDD7},
    {0xDE0, 0xDE5}, {0xDF0, 0xDF1}, {0xDF5, 0xE00}, {0xE3B, 0xE3E},
    {0xE5C, 0xE80}, {0xE83, 0xE83}, {0xE85, 0xE85}, {0xE8B, 0xE8B},
    {0xEA4, 0xEA4}, {0xEA6, 0xEA6}, {0xEBE, 0xEBF}, {0xEC5, 0xEC5},
    {0xEC7, 0xEC7}, {0xECE, 0xECF}, {0xEDA, 0xEDB}, {0xEE0, 0xEFF},
    {0xF48, 0xF48}, {0xF6D, 0xF70}, {0xF98, 0xF98}, {0xFBD, 0xFBD},
    {0xFCD, 0xFCD}, {0xFDB, 0xFFF}, {0x10C6, 0x10C6}, {0x10C8, 0x10CC},
    {0x10CE, 0x10CF}, {0x1249, 0x1249}, {0x124E, 0x124F}, {0x1257, 0x1257},
    {0x1259, 0x1259}, {0x125E, 0x125F}, {0x1289, 0x1289}, {0x128E, 0x128F},
    {0x12B1, 0x12B1}, {0x12B6, 0x12B7}, {0x12BF, 0x12BF}, {0x12C1, 0x12C1},
    {0x12C6, 0x12C7}, {0x12D7, 0x12D7}, {0x1311, 0x1311}, {0x1316, 0x1317},
    {0x135B, 0x135C}, {0x137D, 0x137F}, {0x139A, 0x139F}, {0x13F6, 0x13F7},
    {0x13FE, 0x13FF}, {0x169D, 0x169F}, {0x16F9, 0x16FF}, {0x170D, 0x170D},
    {0x1715, 0x171F}, {0x1737, 0x173F}, {0x1754, 0x175F}, {0x176D, 0x176D},
    {0x1771, 0x1771}, {0x1774, 0x177F}, {0x17DE, 0x17DF}, {0x17EA, 0x17EF},
    {0x17FA, 0x17FF}, {0x180E, 0x180F}, {0x181A, 0x181F}, {0x1879, 0x187F},
    {0x18AB, 0x18AF}, {0x18F6, 0x18FF}, {0x191F, 0x191F}, {0x192C, 0x192F},
    {0x193C, 0x193F}, {0x1941, 0x1943}, {0x196E, 0x196F}, {0x1975, 0x197F},
    {0x19AC, 0x19AF}, {0x19CA, 0x19CF}, {0x19DB, 0x19DD}, {0x1A1C, 0x1A1D},
    {0x1A5F, 0x1A5F}, {0x1A7D, 0x1A7E}, {0x1A8A, 0x1A8F}, {0x1A9A, 0x1A9F},
    {0x1AAE, 0x1AAF}, {0x1AC1, 0x1AFF}, {0x1B4C, 0x1B4F}, {0x1B7D, 0x1B7F},
    {0x1BF4, 0x1BFB}, {0x1C38, 0x1C3A}, {0x1C4A, 0x1C4C}, {0x1C89, 0x1C8F},
    {0x1CBB, 0x1CBC}, {0x1CC8, 0x1CCF}, {0x1CFB, 0x1CFF}, {0x1DFA, 0x1DFA},
    {0x1F16, 0x1F17}, {0x1F1E, 0x1F1F}, {0x1F46, 0x1F47}, {0x1F4E, 0x1F4F},
    {0x1F58, 0x1F58}, {0x1F5A, 0x1F5A}, {0x1F5C, 0x1F5C}, {0x1F5E, 0x1F5E},
    {0x1F7E, 0x1F7F}, {0x1FB5, 0x1FB5}, {0x1FC5, 0x1FC5}, {0x1FD4, 0x1FD5},
    {0x1FDC, 0x1FDC}, {0x1FF0, 0x1FF1}, {0x1FF5, 0x1FF5}, {0x1FFF, 0x1FFF},
    {0x200B, 0x200F}, {0x202A, 0x202E}, {0x2060, 0x206F}, {0x2072, 0x2073},
    {0x208F, 0x208F}, {0x209D, 0x209F}, {0x20C0, 0x20CF}, {0x20F1, 0x20FF},
    {0x218C, 0x218F}, {0x2427, 0x243F}, {0x244B, 0x245F}, {0x2B74, 0x2B75},
    {0x2B96, 0x2B96}, {0x2C2F, 0x2C2F}, {0x2C5F, 0x2C5F}, {0x2CF4, 0x2CF8},
    {0x2D26, 0x2D26}, {0x2D28, 0x2D2C}, {0x2D2E, 0x2D2F}, {0x2D68, 0x2D6E},
    {0x2D71, 0x2D7E}, {0x2D97, 0x2D9F}, {0x2DA7, 0x2DA7}, {0x2DAF, 0x2DAF},
    {0x2DB7, 0x2DB7}, {0x2DBF, 0x2DBF}, {0x2DC7, 0x2DC7}, {0x2DCF, 0x2DCF},
    {0x2DD7, 0x2DD7}, {0x2DDF, 0x2DDF}, {0x2E53, 0x2E7F}, {0x2E9A, 0x2E9A},
    {0x2EF4, 0x2EFF}, {0x2FD6, 0x2FEF}, {0x2FFC, 0x2FFF}, {0x3040, 0x3040},
    {0x3097, 0x3098}, {0x3100, 0x3104}, {0x3130, 0x3130}, {0x318F, 0x318F},
    {0x31E4, 0x31EF}, {0x321F, 0x321F}, {0x9FFD, 0x9FFF}, {0xA48D, 0xA48F},
    {0xA4C7, 0xA4CF}, {0xA62C, 0xA63F}, {0xA6F8, 0xA6FF}, {0xA7C0, 0xA7C1},
    {0xA7CB, 0xA7F4}, {0xA82D, 0xA82F}, {0xA83A, 0xA83F}, {0xA878, 0xA87F},
    {0xA8C6, 0xA8CD}, {0xA8DA, 0xA8DF}, {0xA954, 0xA95E}, {0xA97D, 0xA97F},
    {0xA9CE, 0xA9CE}, {0xA9DA, 0xA9DD}, {0xA9FF, 0xA9FF}, {0xAA37, 0xAA3F},
    {0xAA4E, 0xAA4F}, {0xAA5A, 0xAA5B}, {0xAAC3, 0xAADA}, {0xAAF7, 0xAB00},
    {0xAB07, 0xAB08}, {0xAB0F, 0xAB10}, {0xAB17, 0xAB1F}, {0xAB27, 0xAB27},
    {0xAB2F, 0xAB2F}, {0xAB6C, 0xAB6F}, {0xABEE, 0xABEF}, {0xABFA, 0xABFF},
    {0xD7A4, 0xD7AF}, {0xD7C7, 0xD7CA}, {0xD7FC, 0xF8FF}, {0xFA6E, 0xFA6F},
    {0xFADA, 0xFAFF}, {0xFB07, 0xFB12}, {0xFB18, 0xFB1C}, {0xFB37, 0xFB37},
    {0xFB3D, 0xFB3D}, {0xFB3F, 0xFB3F}, {0xFB42, 0xFB42}, {0xFB45, 0xFB45},
    {0xFBC2, 0xFBD2}, {0xFD40, 0xFD4F}, {0xFD90, 0xFD91}, {0xFDC8, 0xFDEF},
    {0xFDFE, 0xFDFF}, {0xFE1A, 0xFE1F}, {0xFE53, 0xFE53}, {0xFE67, 0xFE67},
    {0xFE6C, 0xFE6F}, {0xFE75, 0xFE75}, {0xFEFD, 0xFF00}, {0xFFBF, 0xFFC1},
    {0xFFC8, 0xFFC9}, {0xFFD0, 0xFFD1}, {0xFFD8, 0xFFD9}, {0xFFDD, 0xFFDF},
    {0xFFE7, 0xFFE7}, {0xFFEF, 0xFFFB}, {0xFFFE, 0xFFFF}, {0x1000C, 0x1000C},
    {0x10027, 0x10027}, {0x1003B, 0x1003B}, {0x1003E, 0x1003E}, {0x1004E, 0x1004F},
    {0x1005E, 0x1007F}, {0x100FB, 0x100FF}, {0x10103, 0x10106}, {0x10134, 0x10136},
    {0x1018F, 0x1018F}, {0x1019D, 0x1019F}, {0x101A1, 0x101CF}, {0x101FE, 0x1027F},
    {0x1029D, 0x1029F}, {0x102D1, 0x102DF}, {0x102FC, 0x102FF}, {0x10324, 0x1032C},
    {0x1034B, 0x1034F}, {0x1037B, 0x1037F}, {0x1039E, 0x1039E}, {0x103C4, 0x103C7},
    {0x103D6, 0x103FF}, {0x1049E, 0x1049F}, {0x104AA, 0x104AF}, {0x104D4, 0x104D7},
    {0x104FC, 0x104FF}, {0x10528, 0x1052F}, {0x10564, 0x1056E}, {0x10570, 0x105FF},
    {0x10737, 0x1073F}, {0x10756, 0x1075F}, {0x10768, 0x107FF}, {0x10806, 0x10807},
    {0x10809, 0x10809}, {0x10836, 0x10836}, {0x10839, 0x1083B}, {0x1083D, 0x1083E},
    {0x10856, 0x10856}, {0x1089F, 0x108A6}, {0x108B0, 0x108DF}, {0x108F3, 0x108F3},
    {0x108F6, 0x108FA}, {0x1091C, 0x1091E}, {0x1093A, 0x1093E}, {0x10940, 0x1097F},
    {0x109B8, 0x109BB}, {0x109D0, 0x109D1}, {0x10A04, 0x10A04}, {0x10A07, 0x10A0B},
    {0x10A14, 0x10A14}, {0x10A18, 0x10A18}, {0x10A36, 0x10A37}, {0x10A3B, 0x10A3E},
    {0x10A49, 0x10A4F}, {0x10A59, 0x10A5F}, {0x10AA0, 0x10ABF}, {0x10AE7, 0x10AEA},
    {0x10AF7, 0x10AFF}, {0x10B36, 0x10B38}, {0x10B56, 0x10B57}, {0x10B73, 0x10B77},
    {0x10B92, 0x10B98}, {0x10B9D, 0x10BA8}, {0x10BB0, 0x10BFF}, {0x10C49, 0x10C7F},
    {0x10CB3, 0x10CBF}, {0x10CF3, 0x10CF9}, {0x10D28, 0x10D2F}, {0x10D3A, 0x10E5F},
    {0x10E7F, 0x10E7F}, {0x10EAA, 0x10EAA}, {0x10EAE, 0x10EAF}, {0x10EB2, 0x10EFF},
    {0x10F28, 0x10F2F}, {0x10F5A, 0x10FAF}, {0x10FCC, 0x10FDF}, {0x10FF7, 0x10FFF},
    {0x1104E, 0x11051}, {0x11070, 0x1107E}, {0x110BD, 0x110BD}, {0x110C2, 0x110CF},
    {0x110E9, 0x110EF}, {0x110FA, 0x110FF}, {0x11135, 0x11135}, {0x11148, 0x1114F},
    {0x11177, 0x1117F}, {0x111E0, 0x111E0}, {0x111F5, 0x111FF}, {0x11212, 0x11212},
    {0x1123F, 0x1127F}, {0x11287, 0x11287}, {0x11289, 0x11289}, {0x1128E, 0x1128E},
    {0x1129E, 0x1129E}, {0x112AA, 0x112AF}, {0x112EB, 0x112EF}, {0x112FA, 0x112FF},
    {0x11304, 0x11304}, {0x1130D, 0x1130E}, {0x11311, 0x11312}, {0x11329, 0x11329},
    {0x11331, 0x11331}, {0x11334, 0x11334}, {0x1133A, 0x1133A}, {0x11345, 0x11346},
    {0x11349, 0x1134A}, {0x1134E, 0x1134F}, {0x11351, 0x11356}, {0x11358, 0x1135C},
    {0x11364, 0x11365}, {0x1136D, 0x1136F}, {0x11375, 0x113FF}, {0x1145C, 0x1145C},
    {0x11462, 0x1147F}, {0x114C8, 0x114CF}, {0x114DA, 0x1157F}, {0x115B6, 0x115B7},
    {0x115DE, 0x115FF}, {0x11645, 0x1164F}, {0x1165A, 0x1165F}, {0x1166D, 0x1167F},
    {0x116B9, 0x116BF}, {0x116CA, 0x116FF}, {0x1171B, 0x1171C}, {0x1172C, 0x1172F},
    {0x11740, 0x117FF}, {0x1183C, 0x1189F}, {0x118F3, 0x118FE}, {0x11907, 0x11908},
    {0x1190A, 0x1190B}, {0x11914, 0x11914}, {0x11917, 0x11917}, {0x11936, 0x11936},
    {0x11939, 0x1193A}, {0x11947, 0x1194F}, {0x1195A, 0x1199F}, {0x119A8, 0x119A9},
    {0x119D8, 0x119D9}, {0x119E5, 0x119FF}, {0x11A48, 0x11A4F}, {0x11AA3, 0x11ABF},
    {0x11AF9, 0x11BFF}, {0x11C09, 0x11C09}, {0x11C37, 0x11C37}, {0x11C46, 0x11C4F},
    {0x11C6D, 0x11C6F}, {0x11C90, 0x11C91}, {0x11CA8, 0x11CA8}, {0x11CB7, 0x11CFF},
    {0x11D07, 0x11D07}, {0x11D0A, 0x11D0A}, {0x11D37, 0x11D39}, {0x11D3B, 0x11D3B},
    {0x11D3E, 0x11D3E}, {0x11D48, 0x11D4F}, {0x11D5A, 0x11D5F}, {0x11D66, 0x11D66},
    {0x11D69, 0x11D69}, {0x11D8F, 0x11D8F}, {0x11D92, 0x11D92}, {0x11D99, 0x11D9F},
    {0x11DAA, 0x11EDF}, {0x11EF9, 0x11FAF}, {0x11FB1, 0x11FBF}, {0x11FF2, 0x11FFE},
    {0x1239A, 0x123FF}, {0x1246F, 0x1246F}, {0x12475, 0x1247F}, {0x12544, 0x12FFF},
    {0x1342F, 0x143FF}, {0x14647, 0x167FF}, {0x16A39, 0x16A3F}, {0x16A5F, 0x16A5F},
    {0x16A6A, 0x16A6D}, {0x16A70, 0x16ACF}, {0x16AEE, 0x16AEF}, {0x16AF6, 0x16AFF},
    {0x16B46, 0x16B4F}, {0x16B5A, 0x16B5A}, {0x16B62, 0x16B62}, {0x16B78, 0x16B7C},
    {0x16B90, 0x16E3F}, {0x16E9B, 0x16EFF}, {0x16F4B, 0x16F4E}, {0x16F88, 0x16F8E},
    {0x16FA0, 0x16FDF}, {0x16FE5, 0x16FEF}, {0x16FF2, 0x16FFF}, {0x187F8, 0x187FF},
    {0x18CD6, 0x18CFF}, {0x18D09, 0x1AFFF}, {0x1B11F, 0x1B14F}, {0x1B153, 0x1B163},
    {0x1B168, 0x1B16F}, {0x1B2FC, 0x1BBFF}, {0x1BC6B, 0x1BC6F}, {0x1BC7D, 0x1BC7F},
    {0x1BC89, 0x1BC8F}, {0x1BC9A, 0x1BC9B}, {0x1BCA0, 0x1CFFF}, {0x1D0F6, 0x1D0FF},
    {0x1D127, 0x1D128}, {0x1D173, 0x1D17A}, {0x1D1E9, 0x1D1FF}, {0x1D246, 0x1D2DF},
    {0x1D2F4, 0x1D2FF}, {0x1D357, 0x1D35F}, {0x1D379, 0x1D3FF}, {0x1D455, 0x1D455},
    {0x1D49D, 0x1D49D}, {0x1D4A0, 0x1D4A1}, {0x1D4A3, 0x1D4A4}, {0x1D4A7, 0x1D4A8},
    {0x1D4AD, 0x1D4AD}, {0x1D4BA, 0x1D4BA}, {0x1D4BC, 0x1D4BC}, {0x1D4C4, 0x1D4C4},
    {0x1D506, 0x1D506}, {0x1D50B, 0x1D50C}, {0x1D515, 0x1D515}, {0x1D51D, 0x1D51D},
    {0x1D53A, 0x1D53A}, {0x1D53F, 0x1D53F}, {0x1D545, 0x1D545}, {0x1D547, 0x1D549},
    {0x1D551, 0x1D551}, {0x1D6A6, 0x1D6A7}, {0x1D7CC, 0x1D7CD}, {0x1DA8C, 0x1DA9A},
    {0x1DAA0, 0x1DAA0}, {0x1DAB0, 0x1DFFF}, {0x1E007, 0x1E007}, {0x1E019, 0x1E01A},
    {0x1E022, 0x1E022}, {0x1E025, 0x1E025}, {0x1E02B, 0x1E0FF}, {0x1E12D, 0x1E12F},
    {0x1E13E, 0x1E13F}, {0x1E14A, 0x1E14D}, {0x1E150, 0x1E2BF}, {0x1E2FA, 0x1E2FE},
    {0x1E300, 0x1E7FF}, {0x1E8C5, 0x1E8C6}, {0x1E8D7, 0x1E8FF}, {0x1E94C, 0x1E94F},
    {0x1E95A, 0x1E95D}, {0x1E960, 0x1EC70}, {0x1ECB5, 0x1ED00}, {0x1ED3E, 0x1EDFF},
    {0x1EE04, 0x1EE04}, {0x1EE20, 0x1EE20}, {0x1EE23, 0x1EE23}, {0x1EE25, 0x1EE26},
    {0x1EE28, 0x1EE28}, {0x1EE33, 0x1EE33}, {0x1EE38, 0x1EE38}, {0x1EE3A, 0x1EE3A},
    {0x1EE3C, 0x1EE41}, {0x1EE43, 0x1EE46}, {0x1EE48, 0x1EE48}, {0x1EE4A, 0x1EE4A},
    {0x1EE4C, 0x1EE4C}, {0x1EE50, 0x1EE50}, {0x1EE53, 0x1EE53}, {0x1EE55, 0x1EE56},
    {0x1EE58, 0x1EE58}, {0x1EE5A, 0x1EE5A}, {0x1EE5C, 0x1EE5C}, {0x1EE5E, 0x1EE5E},
    {0x1EE60, 0x1EE60}, {0x1EE63, 0x1EE63}, {0x1EE65, 0x1EE66}, {0x1EE6B, 0x1EE6B},
    {0x1EE73, 0x1EE73}, {0x1EE78, 0x1EE78}, {0x1EE7D, 0x1EE7D}, {0x1EE7F, 0x1EE7F},
    {0x1EE8A, 0x1EE8A}, {0x1EE9C, 0x1EEA0}, {0x1EEA4, 0x1EEA4}, {0x1EEAA, 0x1EEAA},
    {0x1EEBC, 0x1EEEF}, {0x1EEF2, 0x1EFFF}, {0x1F02C, 0x1F02F}, {0x1F094, 0x1F09F},
    {0x1F0AF, 0x1F0B0}, {0x1F0C0, 0x1F0C0}, {0x1F0D0, 0x1F0D0}, {0x1F0F6, 0x1F0FF},
    {0x1F1AE, 0x1F1E5}, {0x1F203, 0x1F20F}, {0x1F23C, 0x1F23F}, {0x1F249, 0x1F24F},
    {0x1F252, 0x1F25F}, {0x1F266, 0x1F2FF}, {0x1F6D8, 0x1F6DF}, {0x1F6ED, 0x1F6EF},
    {0x1F6FD, 0x1F6FF}, {0x1F774, 0x1F77F}, {0x1F7D9, 0x1F7DF}, {0x1F7EC, 0x1F7FF},
    {0x1F80C, 0x1F80F}, {0x1F848, 0x1F84F}, {0x1F85A, 0x1F85F}, {0x1F888, 0x1F88F},
    {0x1F8AE, 0x1F8AF}, {0x1F8B2, 0x1F8FF}, {0x1F979, 0x1F979}, {0x1F9CC, 0x1F9CC},
    {0x1FA54, 0x1FA5F}, {0x1FA6E, 0x1FA6F}, {0x1FA75, 0x1FA77}, {0x1FA7B, 0x1FA7F},
    {0x1FA87, 0x1FA8F}, {0x1FAA9, 0x1FAAF}, {0x1FAB7, 0x1FABF}, {0x1FAC3, 0x1FACF},
    {0x1FAD7, 0x1FAFF}, {0x1FB93, 0x1FB93}, {0x1FBCB, 0x1FBEF}, {0x1FBFA, 0x1FFFF},
    {0x2A6DE, 0x2A6FF}, {0x2B735, 0x2B73F}, {0x2B81E, 0x2B81F}, {0x2CEA2, 0x2CEAF},
    {0x2EBE1, 0x2F7FF}, {0x2FA1E, 0x2FFFF}, {0x3134B, 0xE00FF}, {0xE01F0, 0x10FFFF},
};

inline constexpr CpRange kCombiningMark[] = {
    {0x300, 0x36F}, {0x483, 0x487}, {0x591, 0x5BD}, {0x5BF, 0x5BF},
    {0x5C1, 0x5C2}, {0x5C4, 0x5C5}, {0x5C7, 0x5C7}, {0x610, 0x61A},
    {0x64B, 0x65F}, {0x670, 0x670}, {0x6D6, 0x6DC}, {0x6DF, 0x6E4},
    {0x6E7, 0x6E8}, {0x6EA, 0x6ED}, {0x711, 0x711}, {0x730, 0x74A},
    {0x7A6, 0x7B0}, {0x7EB, 0x7F3}, {0x7FD, 0x7FD}, {0x816, 0x819},
    {0x81B, 0x823}, {0x825, 0x827}, {0x829, 0x82D}, {0x859, 0x85B},
    {0x8D3, 0x8E1}, {0x8E3, 0x902}, {0x93A, 0x93A}, {0x93C, 0x93C},
    {0x941, 0x948}, {0x94D, 0x94D}, {0x951, 0x957}, {0x962, 0x963},
    {0x981, 0x981}, {0x9BC, 0x9BC}, {0x9C1, 0x9C4}, {0x9CD, 0x9CD},
    {0x9E2, 0x9E3}, {0x9FE, 0x9FE}, {0xA01, 0xA02}, {0xA3C, 0xA3C},
    {0xA41, 0xA42}, {0xA47, 0xA48}, {0xA4B, 0xA4D}, {0xA51, 0xA51},
    {0xA70, 0xA71}, {0xA75, 0xA75}, {0xA81, 0xA82}, {0xABC, 0xABC},
    {0xAC1, 0xAC5}, {0xAC7, 0xAC8}, {0xACD, 0xACD}, {0xAE2, 0xAE3},
    {0xAFA, 0xAFF}, {0xB01, 0xB01}, {0xB3C, 0xB3C}, {0xB3F, 0xB3F},
    {0xB41, 0xB44}, {0xB4D, 0xB4D}, {0xB55, 0xB56}, {0xB62, 0xB63},
    {0xB82, 0xB82}, {0xBC0, 0xBC0}, {0xBCD, 0xBCD}, {0xC00, 0xC00},
    {0xC04, 0xC04}, {0xC3E, 0xC40}, {0xC46, 0xC48}, {0xC4A, 0xC4D},
    {0xC55, 0xC56}, {0xC62, 0xC63}, {0xC81, 0xC81}, {0xCBC, 0xCBC},
    {0xCBF, 0xCBF}, {0xCC6, 0xCC6}, {0xCCC, 0xCCD}, {0xCE2, 0xCE3},
    {0xD00, 0xD01}, {0xD3B, 0xD3C}, {0xD41, 0xD44}, {0xD4D, 0xD4D},
    {0xD62, 0xD63}, {0xD81, 0xD81}, {0xDCA, 0xDCA}, {0xDD2, 0xDD4},
    {0xDD6, 0xDD6}, {0xE31, 0xE31}, {0xE34, 0xE3A}, {0xE47, 0xE4E},
    {0xEB1, 0xEB1}, {0xEB4, 0xEBC}, {0xEC8, 0xECD}, {0xF18, 0xF19},
    {0xF35, 0xF35}, {0xF37, 0xF37}, {0xF39, 0xF39}, {0xF71, 0xF7E},
    {0xF80, 0xF84}, {0xF86, 0xF87}, {0xF8D, 0xF97}, {0xF99, 0xFBC},
    {0xFC6, 0xFC6}, {0x102D, 0x1030}, {0x1032, 0x1037}, {0x1039, 0x103A},
    {0x103D, 0x103E}, {0x1058, 0x1059}, {0x105E, 0x1060}, {0x1071, 0x1074},
    {0x1082, 0x1082}, {0x1085, 0x1086}, {0x108D, 0x108D}, {0x109D, 0x109D},
    {0x135D, 0x135F}, {0x1712, 0x1714}, {0x1732, 0x1734}, {0x1752, 0x1753},
    {0x1772, 0x1773}, {0x17B4, 0x17B5}, {0x17B7, 0x17BD}, {0x17C6, 0x17C6},
    {0x17C9, 0x17D3}, {0x17DD, 0x17DD}, {0x180B, 0x180D}, {0x1885, 0x1886},
    {0x18A9, 0x18A9}, {0x1920, 0x1922}, {0x1927, 0x1928}, {0x1932, 0x1932},
    {0x1939, 0x193B}, {0x1A17, 0x1A18}, {0x1A1B, 0x1A1B}, {0x1A56, 0x1A56},
    {0x1A58, 0x1A5E}, {0x1A60, 0x1A60}, {0x1A62, 0x1A62}, {0x1A65, 0x1A6C},
    {0x1A73, 0x1A7C}, {0x1A7F, 0x1A7F}, {0x1AB0, 0x1ABD}, {0x1ABF, 0x1AC0},
    {0x1B00, 0x1B03}, {0x1B34, 0x1B34}, {0x1B36, 0x1B3A}, {0x1B3C, 0x1B3C},
    {0x1B42, 0x1B42}, {0x1B6B, 0x1B73}, {0x1B80, 0x1B81}, {0x1BA2, 0x1BA5},
    {0x1BA8, 0x1BA9}, {0x1BAB, 0x1BAD}, {0x1BE6, 0x1BE6}, {0x1BE8, 0x1BE9},
    {0x1BED, 0x1BED}, {0x1BEF, 0x1BF1}, {0x1C2C, 0x1C33}, {0x1C36, 0x1C37},
    {0x1CD0, 0x1CD2}, {0x1CD4, 0x1CE0}, {0x1CE2, 0x1CE8}, {0x1CED, 0x1CED},
    {0x1CF4, 0x1CF4}, {0x1CF8, 0x1CF9}, {0x1DC0, 0x1DF9}, {0x1DFB, 0x1DFF},
    {0x20D0, 0x20DC}, {0x20E1, 0x20E1}, {0x20E5, 0x20F0}, {0x2CEF, 0x2CF1},
    {0x2D7F, 0x2D7F}, {0x2DE0, 0x2DFF}, {0x302A, 0x302D}, {0x3099, 0x309A},
    {0xA66F, 0xA66F}, {0xA674, 0xA67D}, {0xA69E, 0xA69F}, {0xA6F0, 0xA6F1},
    {0xA802, 0xA802}, {0xA806, 0xA806}, {0xA80B, 0xA80B}, {0xA825, 0xA826},
    {0xA82C, 0xA82C}, {0xA8C4, 0xA8C5}, {0xA8E0, 0xA8F1}, {0xA8FF, 0xA8FF},
    {0xA926, 0xA92D}, {0xA947, 0xA951}, {0xA980, 0xA982}, {0xA9B3, 0xA9B3},
    {0xA9B6, 0xA9B9}, {0xA9BC, 0xA9BD}, {0xA9E5, 0xA9E5}, {0xAA29, 0xAA2E},
    {0xAA31, 0xAA32}, {0xAA35, 0xAA36}, {0xAA43, 0xAA43}, {0xAA4C, 0xAA4C},
    {0xAA7C, 0xAA7C}, {0xAAB0, 0xAAB0}, {0xAAB2, 0xAAB4}, {0xAAB7, 0xAAB8},
    {0xAABE, 0xAABF}, {0xAAC1, 0xAAC1}, {0xAAEC, 0xAAED}, {0xAAF6, 0xAAF6},
    {0xABE5, 0xABE5}, {0xABE8, 0xABE8}, {0xABED, 0xABED}, {0xFB1E, 0xFB1E},
    {0xFE00, 0xFE0F}, {0xFE20, 0xFE2F}, {0x101FD, 0x101FD}, {0x102E0, 0x102E0},
    {0x10376, 0x1037A}, {0x10A01, 0x10A03}, {0x10A05, 0x10A06}, {0x10A0C, 0x10A0F},
    {0x10A38, 0x10A3A}, {0x10A3F, 0x10A3F}, {0x10AE5, 0x10AE6}, {0x10D24, 0x10D27},
    {0x10EAB, 0x10EAC}, {0x10F46, 0x10F50}, {0x11001, 0x11001}, {0x11038, 0x11046},
    {0x1107F, 0x11081}, {0x110B3, 0x110B6}, {0x110B9, 0x110BA}, {0x11100, 0x11102},
    {0x11127, 0x1112B}, {0x1112D, 0x11134}, {0x11173, 0x11173}, {0x11180, 0x11181},
    {0x111B6, 0x111BE}, {0x111C9, 0x111CC}, {0x111CF, 0x111CF}, {0x1122F, 0x11231},
    {0x11234, 0x11234}, {0x11236, 0x11237}, {0x1123E, 0x1123E}, {0x112DF, 0x112DF},
    {0x112E3, 0x112EA}, {0x11300, 0x11301}, {0x1133B, 0x1133C}, {0x11340, 0x11340},
    {0x11366, 0x1136C}, {0x11370, 0x11374}, {0x11438, 0x1143F}, {0x11442, 0x11444},
    {0x11446, 0x11446}, {0x1145E, 0x1145E}, {0x114B3, 0x114B8}, {0x114BA, 0x114BA},
    {0x114BF, 0x114C0}, {0x114C2, 0x114C3}, {0x115B2, 0x115B5}, {0x115BC, 0x115BD},
    {0x115BF, 0x115C0}, {0x115DC, 0x115DD}, {0x11633, 0x1163A}, {0x1163D, 0x1163D},
    {0x1163F, 0x11640}, {0x116AB, 0x116AB}, {0x116AD, 0x116AD}, {0x116B0, 0x116B5},
    {0x116B7, 0x116B7}, {0x1171D, 0x1171F}, {0x11722, 0x11725}, {0x11727, 0x1172B},
    {0x1182F, 0x11837}, {0x11839, 0x1183A}, {0x1193B, 0x1193C}, {0x1193E, 0x1193E},
    {0x11943, 0x11943}, {0x119D4, 0x119D7}, {0x119DA, 0x119DB}, {0x119E0, 0x119E0},
    {0x11A01, 0x11A0A}, {0x11A33, 0x11A38}, {0x11A3B, 0x11A3E}, {0x11A47, 0x11A47},
    {0x11A51, 0x11A56}, {0x11A59, 0x11A5B}, {0x11A8A, 0x11A96}, {0x11A98, 0x11A99},
    {0x11C30, 0x11C36}, {0x11C38, 0x11C3D}, {0x11C3F, 0x11C3F}, {0x11C92, 0x11CA7},
    {0x11CAA, 0x11CB0}, {0x11CB2, 0x11CB3}, {0x11CB5, 0x11CB6}, {0x11D31, 0x11D36},
    {0x11D3A, 0x11D3A}, {0x11D3C, 0x11D3D}, {0x11D3F, 0x11D45}, {0x11D47, 0x11D47},
    {0x11D90, 0x11D91}, {0x11D95, 0x11D95}, {0x11D97, 0x11D97}, {0x11EF3, 0x11EF4},
    {0x16AF0, 0x16AF4}, {0x16B30, 0x16B36}, {0x16F4F, 0x16F4F}, {0x16F8F, 0x16F92},
    {0x16FE4, 0x16FE4}, {0x1BC9D, 0x1BC9E}, {0x1D167, 0x1D169}, {0x1D17B, 0x1D182},
    {0x1D185, 0x1D18B}, {0x1D1AA, 0x1D1AD}, {0x1D242, 0x1D244}, {0x1DA00, 0x1DA36},
    {0x1DA3B, 0x1DA6C}, {0x1DA75, 0x1DA75}, {0x1DA84, 0x1DA84}, {0x1DA9B, 0x1DA9F},
    {0x1DAA1, 0x1DAAF}, {0x1E000, 0x1E006}, {0x1E008, 0x1E018}, {0x1E01B, 0x1E021},
    {0x1E023, 0x1E024}, {0x1E026, 0x1E02A}, {0x1E130, 0x1E136}, {0x1E2EC, 0x1E2EF},
    {0x1E8D0, 0x1E8D6}, {0x1E944, 0x1E94A}, {0xE0100, 0xE01EF},
};

inline constexpr CpRange kPunctOrSymbol[] = {
    {0x21, 0x2F}, {0x3A, 0x40}, {0x5B, 0x60}, {0x7B, 0x7E},
    {0xA1, 0xA9}, {0xAB, 0xAC}, {0xAE, 0xB1}, {0xB4, 0xB4},
    {0xB6, 0xB8}, {0xBB, 0xBB}, {0xBF, 0xBF}, {0xD7, 0xD7},
    {0xF7, 0xF7}, {0x2C2, 0x2C5}, {0x2D2, 0x2DF}, {0x2E5, 0x2EB},
    {0x2ED, 0x2ED}, {0x2EF, 0x2FF}, {0x375, 0x375}, {0x37E, 0x37E},
    {0x384, 0x385}, {0x387, 0x387}, {0x3F6, 0x3F6}, {0x482, 0x482},
    {0x55A, 0x55F}, {0x589, 0x58A}, {0x58D, 0x58F}, {0x5BE, 0x5BE},
    {0x5C0, 0x5C0}, {0x5C3, 0x5C3}, {0x5C6, 0x5C6}, {0x5F3, 0x5F4},
    {0x606, 0x60F}, {0x61B, 0x61B}, {0x61E, 0x61F}, {0x66A, 0x66D},
    {0x6D4, 0x6D4}, {0x6DE, 0x6DE}, {0x6E9, 0x6E9}, {0x6FD, 0x6FE},
    {0x700, 0x70D}, {0x7F6, 0x7F9}, {0x7FE, 0x7FF}, {0x830, 0x83E},
    {0x85E, 0x85E}, {0x964, 0x965}, {0x970, 0x970}, {0x9F2, 0x9F3},
    {0x9FA, 0x9FB}, {0x9FD, 0x9FD}, {0xA76, 0xA76}, {0xAF0, 0xAF1},
    {0xB70, 0xB70}, {0xBF3, 0xBFA}, {0xC77, 0xC77}, {0xC7F, 0xC7F},
    {0xC84, 0xC84}, {0xD4F, 0xD4F}, {0xD79, 0xD79}, {0xDF4, 0xDF4},
    {0xE3F, 0xE3F}, {0xE4F, 0xE4F}, {0xE5A, 0xE5B}, {0xF01, 0xF17},
    {0xF1A, 0xF1F}, {0xF34, 0xF34}, {0xF36, 0xF36}, {0xF38, 0xF38},
    {0xF3A, 0xF3D}, {0xF85, 0xF85}, {0xFBE, 0xFC5}, {0xFC7, 0xFCC},
    {0xFCE, 0xFDA}, {0x104A, 0x104F}, {0x109E, 0x109F}, {0x10FB, 0x10FB},
    {0x1360, 0x1368}, {0x1390, 0x1399}, {0x1400, 0x1400}, {0x166D, 0x166E},
    {0x169B, 0x169C}, {0x16EB, 0x16ED}, {0x1735, 0x1736}, {0x17D4, 0x17D6},
    {0x17D8, 0x17DB}, {0x1800, 0x180A}, {0x1940, 0x1940}, {0x1944, 0x1945},
    {0x19DE, 0x19FF}, {0x1A1E, 0x1A1F}, {0x1AA0, 0x1AA6}, {0x1AA8, 0x1AAD},
    {0x1B5A, 0x1B6A}, {0x1B74, 0x1B7C}, {0x1BFC, 0x1BFF}, {0x1C3B, 0x1C3F},
    {0x1C7E, 0x1C7F}, {0x1CC0, 0x1CC7}, {0x1CD3, 0x1CD3}, {0x1FBD, 0x1FBD},
    {0x1FBF, 0x1FC1}, {0x1FCD, 0x1FCF}, {0x1FDD, 0x1FDF}, {0x1FED, 0x1FEF},
    {0x1FFD, 0x1FFE}, {0x2010, 0x2027}, {0x2030, 0x205E}, {0x207A, 0x207E},
    {0x208A, 0x208E}, {0x20A0, 0x20BF}, {0x2100, 0x2101}, {0x2103, 0x2106},
    {0x2108, 0x2109}, {0x2114, 0x2114}, {0x2116, 0x2118}, {0x211E, 0x2123},
    {0x2125, 0x2125}, {0x2127, 0x2127}, {0x2129, 0x2129}, {0x212E, 0x212E},
    {0x213A, 0x213B}, {0x2140, 0x2144}, {0x214A, 0x214D}, {0x214F, 0x214F},
    {0x218A, 0x218B}, {0x2190, 0x2426}, {0x2440, 0x244A}, {0x249C, 0x24E9},
    {0x2500, 0x2775}, {0x2794, 0x2B73}, {0x2B76, 0x2B95}, {0x2B97, 0x2BFF},
    {0x2CE5, 0x2CEA}, {0x2CF9, 0x2CFC}, {0x2CFE, 0x2CFF}, {0x2D70, 0x2D70},
    {0x2E00, 0x2E2E}, {0x2E30, 0x2E52}, {0x2E80, 0x2E99}, {0x2E9B, 0x2EF3},
    {0x2F00, 0x2FD5}, {0x2FF0, 0x2FFB}, {0x3001, 0x3004}, {0x3008, 0x3020},
    {0x3030, 0x3030}, {0x3036, 0x3037}, {0x303D, 0x303F}, {0x309B, 0x309C},
    {0x30A0, 0x30A0}, {0x30FB, 0x30FB}, {0x3190, 0x3191}, {0x3196, 0x319F},
    {0x31C0, 0x31E3}, {0x3200, 0x321E}, {0x322A, 0x3247}, {0x3250, 0x3250},
    {0x3260, 0x327F}, {0x328A, 0x32B0}, {0x32C0, 0x33FF}, {0x4DC0, 0x4DFF},
    {0xA490, 0xA4C6}, {0xA4FE, 0xA4FF}, {0xA60D, 0xA60F}, {0xA673, 0xA673},
    {0xA67E, 0xA67E}, {0xA6F2, 0xA6F7}, {0xA700, 0xA716}, {0xA720, 0xA721},
    {0xA789, 0xA78A}, {0xA828, 0xA82B}, {0xA836, 0xA839}, {0xA874, 0xA877},
    {0xA8CE, 0xA8CF}, {0xA8F8, 0xA8FA}, {0xA8FC, 0xA8FC}, {0xA92E, 0xA92F},
    {0xA95F, 0xA95F}, {0xA9C1, 0xA9CD}, {0xA9DE, 0xA9DF}, {0xAA5C, 0xAA5F},
    {0xAA77, 0xAA79}, {0xAADE, 0xAADF}, {0xAAF0, 0xAAF1}, {0xAB5B, 0xAB5B},
    {0xAB6A, 0xAB6B}, {0xABEB, 0xABEB}, {0xFB29, 0xFB29}, {0xFBB2, 0xFBC1},
    {0xFD3E, 0xFD3F}, {0xFDFC, 0xFDFD}, {0xFE10, 0xFE19}, {0xFE30, 0xFE52},
    {0xFE54, 0xFE66}, {0xFE68, 0xFE6B}, {0xFF01, 0xFF0F}, {0xFF1A, 0xFF20},
    {0xFF3B, 0xFF40}, {0xFF5B, 0xFF65}, {0xFFE0, 0xFFE6}, {0xFFE8, 0xFFEE},
    {0xFFFC, 0xFFFD}, {0x10100, 0x10102}, {0x10137, 0x1013F}, {0x10179, 0x10189},
    {0x1018C, 0x1018E}, {0x10190, 0x1019C}, {0x101A0, 0x101A0}, {0x101D0, 0x101FC},
    {0x1039F, 0x1039F}, {0x103D0, 0x103D0}, {0x1056F, 0x1056F}, {0x10857, 0x10857},
    {0x10877, 0x10878}, {0x1091F, 0x1091F}, {0x1093F, 0x1093F}, {0x10A50, 0x10A58},
    {0x10A7F, 0x10A7F}, {0x10AC8, 0x10AC8}, {0x10AF0, 0x10AF6}, {0x10B39, 0x10B3F},
    {0x10B99, 0x10B9C}, {0x10EAD, 0x10EAD}, {0x10F55, 0x10F59}, {0x11047, 0x1104D},
    {0x110BB, 0x110BC}, {0x110BE, 0x110C1}, {0x11140, 0x11143}, {0x11174, 0x11175},
    {0x111C5, 0x111C8}, {0x111CD, 0x111CD}, {0x111DB, 0x111DB}, {0x111DD, 0x111DF},
    {0x11238, 0x1123D}, {0x112A9, 0x112A9}, {0x1144B, 0x1144F}, {0x1145A, 0x1145B},
    {0x1145D, 0x1145D}, {0x114C6, 0x114C6}, {0x115C1, 0x115D7}, {0x11641, 0x11643},
    {0x11660, 0x1166C}, {0x1173C, 0x1173F}, {0x1183B, 0x1183B}, {0x11944, 0x11946},
    {0x119E2, 0x119E2}, {0x11A3F, 0x11A46}, {0x11A9A, 0x11A9C}, {0x11A9E, 0x11AA2},
    {0x11C41, 0x11C45}, {0x11C70, 0x11C71}, {0x11EF7, 0x11EF8}, {0x11FD5, 0x11FF1},
    {0x11FFF, 0x11FFF}, {0x12470, 0x12474}, {0x16A6E, 0x16A6F}, {0x16AF5, 0x16AF5},
    {0x16B37, 0x16B3F}, {0x16B44, 0x16B45}, {0x16E97, 0x16E9A}, {0x16FE2, 0x16FE2},
    {0x1BC9C, 0x1BC9C}, {0x1BC9F, 0x1BC9F}, {0x1D000, 0x1D0F5}, {0x1D100, 0x1D126},
    {0x1D129, 0x1D164}, {0x1D16A, 0x1D16C}, {0x1D183, 0x1D184}, {0x1D18C, 0x1D1A9},
    {0x1D1AE, 0x1D1E8}, {0x1D200, 0x1D241}, {0x1D245, 0x1D245}, {0x1D300, 0x1D356},
    {0x1D6C1, 0x1D6C1}, {0x1D6DB, 0x1D6DB}, {0x1D6FB, 0x1D6FB}, {0x1D715, 0x1D715},
    {0x1D735, 0x1D735}, {0x1D74F, 0x1D74F}, {0x1D76F, 0x1D76F}, {0x1D789, 0x1D789},
    {0x1D7A9, 0x1D7A9}, {0x1D7C3, 0x1D7C3}, {0x1D800, 0x1D9FF}, {0x1DA37, 0x1DA3A},
    {0x1DA6D, 0x1DA74}, {0x1DA76, 0x1DA83}, {0x1DA85, 0x1DA8B}, {0x1E14F, 0x1E14F},
    {0x1E2FF, 0x1E2FF}, {0x1E95E, 0x1E95F}, {0x1ECAC, 0x1ECAC}, {0x1ECB0, 0x1ECB0},
    {0x1ED2E, 0x1ED2E}, {0x1EEF0, 0x1EEF1}, {0x1F000, 0x1F02B}, {0x1F030, 0x1F093},
    {0x1F0A0, 0x1F0AE}, {0x1F0B1, 0x1F0BF}, {0x1F0C1, 0x1F0CF}, {0x1F0D1, 0x1F0F5},
    {0x1F10D, 0x1F1AD}, {0x1F1E6, 0x1F202}, {0x1F210, 0x1F23B}, {0x1F240, 0x1F248},
    {0x1F250, 0x1F251}, {0x1F260, 0x1F265}, {0x1F300, 0x1F6D7}, {0x1F6E0, 0x1F6EC},
    {0x1F6F0, 0x1F6FC}, {0x1F700, 0x1F773}, {0x1F780, 0x1F7D8}, {0x1F7E0, 0x1F7EB},
    {0x1F800, 0x1F80B}, {0x1F810, 0x1F847}, {0x1F850, 0x1F859}, {0x1F860, 0x1F887},
    {0x1F890, 0x1F8AD}, {0x1F8B0, 0x1F8B1}, {0x1F900, 0x1F978}, {0x1F97A, 0x1F9CB},
    {0x1F9CD, 0x1FA53}, {0x1FA60, 0x1FA6D}, {0x1FA70, 0x1FA74}, {0x1FA78, 0x1FA7A},
    {0x1FA80, 0x1FA86}, {0x1FA90, 0x1FAA8}, {0x1FAB0, 0x1FAB6}, {0x1FAC0, 0x1FAC2},
    {0x1FAD0, 0x1FAD6}, {0x1FB00, 0x1FB92}, {0x1FB94, 0x1FBCA},
};

inline constexpr CpRange kSpaceSeparator[] = {
    {0x20, 0x20}, {0xA0, 0xA0}, {0x1680, 0x1680}, {0x2000, 0x200A},
    {0x202F, 0x202F}, {0x205F, 0x205F}, {0x3000, 0x3000},
};

inline constexpr CpRange kUppercase[] = {
    {0x41, 0x5A}, {0xC0, 0xD6}, {0xD8, 0xDE}, {0x100, 0x100},
    {0x102, 0x102}, {0x104, 0x104}, {0x106, 0x106}, {0x108, 0x108},
    {0x10A, 0x10A}, {0x10C, 0x10C}, {0x10E, 0x10E}, {0x110, 0x110},
    {0x112, 0x112}, {0x114, 0x114}, {0x116, 0x116}, {0x118, 0x118},
    {0x11A, 0x11A}, {0x11C, 0x11C}, {0x11E, 0x11E}, {0x120, 0x120},
    {0x122, 0x122}, {0x124, 0x124}, {0x126, 0x126}, {0x128, 0x128},
    {0x12A, 0x12A}, {0x12C, 0x12C}, {0x12E, 0x12E}, {0x130, 0x130},
    {0x132, 0x132}, {0x134, 0x134}, {0x136, 0x136}, {0x139, 0x139},
    {0x13B, 0x13B}, {0x13D, 0x13D}, {0x13F, 0x13F}, {0x141, 0x141},
    {0x143, 0x143}, {0x145, 0x145}, {0x147, 0x147}, {0x14A, 0x14A},
    {0x14C, 0x14C}, {0x14E, 0x14E}, {0x150, 0x150}, {0x152, 0x152},
    {0x154, 0x154}, {0x156, 0x156}, {0x158, 0x158}, {0x15A, 0x15A},
    {0x15C, 0x15C}, {0x15E, 0x15E}, {0x160, 0x160}, {0x162, 0x162},
    {0x164, 0x164}, {0x166, 0x166}, {0x168, 0x168}, {0x16A, 0x16A},
    {0x16C, 0x16C}, {0x16E, 0x16E}, {0x170, 0x170}, {0x172, 0x172},
    {0x174, 0x174}, {0x176, 0x176}, {0x178, 0x179}, {0x17B, 0x17B},
    {0x17D, 0x17D}, {0x181, 0x182}, {0x184, 0x184}, {0x186, 0x187},
    {0x189, 0x18B}, {0x18E, 0x191}, {0x193, 0x194}, {0x196, 0x198},
    {0x19C, 0x19D}, {0x19F, 0x1A0}, {0x1A2, 0x1A2}, {0x1A4, 0x1A4},
    {0x1A6, 0x1A7}, {0x1A9, 0x1A9}, {0x1AC, 0x1AC}, {0x1AE, 0x1AF},
    {0x1B1, 0x1B3}, {0x1B5, 0x1B5}, {0x1B7, 0x1B8}, {0x1BC, 0x1BC},
    {0x1C4, 0x1C4}, {0x1C7, 0x1C7}, {0x1CA, 0x1CA}, {0x1CD, 0x1CD},
    {0x1CF, 0x1CF}, {0x1D1, 0x1D1}, {0x1D3, 0x1D3}, {0x1D5, 0x1D5},
    {0x1D7, 0x1D7}, {0x1D9, 0x1D9}, {0x1DB, 0x1DB}, {0x1DE, 0x1DE},
    {0x1E0, 0x1E0}, {0x1E2, 0x1E2}, {0x1E4, 0x1E4}, {0x1E6, 0x1E6},
    {0x1E8, 0x1E8}, {0x1EA, 0x1EA}, {0x1EC, 0x1EC}, {0x1EE, 0x1EE},
    {0x1F1, 0x1F1}, {0x1F4, 0x1F4}, {0x1F6, 0x1F8}, {0x1FA, 0x1FA},
    {0x1FC, 0x1FC}, {0x1FE, 0x1FE}, {0x200, 0x200}, {0x202, 0x202},
    {0x204, 0x204}, {0x206, 0x206}, {0x208, 0x208}, {0x20A, 0x20A},
    {0x20C, 0x20C}, {0x20E, 0x20E}, {0x210, 0x210}, {0x212, 0x212},
    {0x214, 0x214}, {0x216, 0x216}, {0x218, 0x218}, {0x21A, 0x21A},
    {0x21C, 0x21C}, {0x21E, 0x21E}, {0x220, 0x220}, {0x222, 0x222},
    {0x224, 0x224}, {0x226, 0x226}, {0x228, 0x228}, {0x22A, 0x22A},
    {0x22C, 0x22C}, {0x22E, 0x22E}, {0x230, 0x230}, {0x232, 0x232},
    {0x23A, 0x23B}, {0x23D, 0x23E}, {0x241, 0x241}, {0x243, 0x246},
    {0x248, 0x248}, {0x24A, 0x24A}, {0x24C, 0x24C}, {0x24E, 0x24E},
    {0x370, 0x370}, {0x372, 0x372}, {0x376, 0x376}, {0x37F, 0x37F},
    {0x386, 0x386}, {0x388, 0x38A}, {0x38C, 0x38C}, {0x38E, 0x38F},
    {0x391, 0x3A1}, {0x3A3, 0x3AB}, {0x3CF, 0x3CF}, {0x3D2, 0x3D4},
    {0x3D8, 0x3D8}, {0x3DA, 0x3DA}, {0x3DC, 0x3DC}, {0x3DE, 0x3DE},
    {0x3E0, 0x3E0}, {0x3E2, 0x3E2}, {0x3E4, 0x3E4}, {0x3E6, 0x3E6},
    {0x3E8, 0x3E8}, {0x3EA, 0x3EA}, {0x3EC, 0x3EC}, {0x3EE, 0x3EE},
    {0x3F4, 0x3F4}, {0x3F7, 0x3F7}, {0x3F9, 0x3FA}, {0x3FD, 0x42F},
    {0x460, 0x460}, {0x462, 0x462}, {0x464, 0x464}, {0x466, 0x466},
    {0x468, 0x468}, {0x46A, 0x46A}, {0x46C, 0x46C}, {0x46E, 0x46E},
    {0x470, 0x470}, {0x472, 0x472}, {0x474, 0x474}, {0x476, 0x476},
    {0x478, 0x478}, {0x47A, 0x47A}, {0x47C, 0x47C}, {0x47E, 0x47E},
    {0x480, 0x480}, {0x48A, 0x48A}, {0x48C, 0x48C}, {0x48E, 0x48E},
    {0x490, 0x490}, {0x492, 0x492}, {0x494, 0x494}, {0x496, 0x496},
    {0x498, 0x498}, {0x49A, 0x49A}, {0x49C, 0x49C}, {0x49E, 0x49E},
    {0x4A0, 0x4A0}, {0x4A2, 0x4A2}, {0x4A4, 0x4A4}, {0x4A6, 0x4A6},
    {0x4A8, 0x4A8}, {0x4AA, 0x4AA}, {0x4AC, 0x4AC}, {0x4AE, 0x4AE},
    {0x4B0, 0x4B0}, {0x4B2, 0x4B2}, {0x4B4, 0x4B4}, {0x4B6, 0x4B6},
    {0x4B8, 0x4B8}, {0x4BA, 0x4BA}, {0x4BC, 0x4BC}, {0x4BE, 0x4BE},
    {0x4C0, 0x4C1}, {0x4C3, 0x4C3}, {0x4C5, 0x4C5}, {0x4C7, 0x4C7},
    {0x4C9, 0x4C9}, {0x4CB, 0x4CB}, {0x4CD, 0x4CD}, {0x4D0, 0x4D0},
    {0x4D2, 0x4D2}, {0x4D4, 0x4D4}, {0x4D6, 0x4D6}, {0x4D8, 0x4D8},
    {0x4DA, 0x4DA}, {0x4DC, 0x4DC}, {0x4DE, 0x4DE}, {0x4E0, 0x4E0},
    {0x4E2, 0x4E2}, {0x4E4, 0x4E4}, {0x4E6, 0x4E6}, {0x4E8, 0x4E8},
    {0x4EA, 0x4EA}, {0x4EC, 0x4EC}, {0x4EE, 0x4EE}, {0x4F0, 0x4F0},
    {0x4F2, 0x4F2}, {0x4F4, 0x4F4}, {0x4F6, 0x4F6}, {0x4F8, 0x4F8},
    {0x4FA, 0x4FA}, {0x4FC, 0x4FC}, {0x4FE, 0x4FE}, {0x500, 0x500},
    {0x502, 0x502}, {0x504, 0x504}, {0x506, 0x506}, {0x508, 0x508},
    {0x50A, 0x50A}, {0x50C, 0x50C}, {0x50E, 0x50E}, {0x510, 0x510},
    {0x512, 0x512}, {0x514, 0x514}, {0x516, 0x516}, {0x518, 0x518},
    {0x51A, 0x51A}, {0x51C, 0x51C}, {0x51E, 0x51E}, {0x520, 0x520},
    {0x522, 0x522}, {0x524, 0x524}, {0x526, 0x526}, {0x528, 0x528},
    {0x52A, 0x52A}, {0x52C, 0x52C}, {0x52E, 0x52E}, {0x531, 0x556},
    {0x10A0, 0x10C5}, {0x10C7, 0x10C7}, {0x10CD, 0x10CD}, {0x13A0, 0x13F5},
    {0x1C90, 0x1CBA}, {0x1CBD, 0x1CBF}, {0x1E00, 0x1E00}, {0x1E02, 0x1E02},
    {0x1E04, 0x1E04}, {0x1E06, 0x1E06}, {0x1E08, 0x1E08}, {0x1E0A, 0x1E0A},
    {0x1E0C, 0x1E0C}, {0x1E0E, 0x1E0E}, {0x1E10, 0x1E10}, {0x1E12, 0x1E12},
    {0x1E14, 0x1E14}, {0x1E16, 0x1E16}, {0x1E18, 0x1E18}, {0x1E1A, 0x1E1A},
    {0x1E1C, 0x1E1C}, {0x1E1E, 0x1E1E}, {0x1E20, 0x1E20}, {0x1E22, 0x1E22},
    {0x1E24, 0x1E24}, {0x1E26, 0x1E26}, {0x1E28, 0x1E28}, {0x1E2A, 0x1E2A},
    {0x1E2C, 0x1E2C}, {0x1E2E, 0x1E2E}, {0x1E30, 0x1E30}, {0x1E32, 0x1E32},
    {0x1E34, 0x1E34}, {0x1E36, 0x1E36}, {0x1E38, 0x1E38}, {0x1E3A, 0x1E3A},
    {0x1E3C, 0x1E3C}, {0x1E3E, 0x1E3E}, {0x1E40, 0x1E40}, {0x1E42, 0x1E42},
    {0x1E44, 0x1E44}, {0x1E46, 0x1E46}, {0x1E48, 0x1E48}, {0x1E4A, 0x1E4A},
    {0x1E4C, 0x1E4C}, {0x1E4E, 0x1E4E}, {0x1E50, 0x1E50}, {0x1E52, 0x1E52},
    {0x1E54, 0x1E54}, {0x1E56, 0x1E56}, {0x1E58, 0x1E58}, {0x1E5A, 0x1E5A},
    {0x1E5C, 0x1E5C}, {0x1E5E, 0x1E5E}, {0x1E60, 0x1E60}, {0x1E62, 0x1E62},
    {0x1E64, 0x1E64}, {0x1E66, 0x1E66}, {0x1E68, 0x1E68}, {0x1E6A, 0x1E6A},
    {0x1E6C, 0x1E6C}, {0x1E6E, 0x1E6E}, {0x1E70, 0x1E70}, {0x1E72, 0x1E72},
    {0x1E74, 0x1E74}, {0x1E76, 0x1E76}, {0x1E78, 0x1E78}, {0x1E7A, 0x1E7A},
    {0x1E7C, 0x1E7C}, {0x1E7E, 0x1E7E}, {0x1E80, 0x1E80}, {0x1E82, 0x1E82},
    {0x1E84, 0x1E84}, {0x1E86, 0x1E86}, {0x1E88, 0x1E88}, {0x1E8A, 0x1E8A},
    {0x1E8C, 0x1E8C}, {0x1E8E, 0x1E8E}, {0x1E90, 0x1E90}, {0x1E92, 0x1E92},
    {0x1E94, 0x1E94}, {0x1E9E, 0x1E9E}, {0x1EA0, 0x1EA0}, {0x1EA2, 0x1EA2},
    {0x1EA4, 0x1EA4}, {0x1EA6, 0x1EA6}, {0x1EA8, 0x1EA8}, {0x1EAA, 0x1EAA},
    {0x1EAC, 0x1EAC}, {0x1EAE, 0x1EAE}, {0x1EB0, 0x1EB0}, {0x1EB2, 0x1EB2},
    {0x1EB4, 0x1EB4}, {0x1EB6, 0x1EB6}, {0x1EB8, 0x1EB8}, {0x1EBA, 0x1EBA},
    {0x1EBC, 0x1EBC}, {0x1EBE, 0x1EBE}, {0x1EC0, 0x1EC0}, {0x1EC2, 0x1EC2},
    {0x1EC4, 0x1EC4}, {0x1EC6, 0x1EC6}, {0x1EC8, 0x1EC8}, {0x1ECA, 0x1ECA},
    {0x1ECC, 0x1ECC}, {0x1ECE, 0x1ECE}, {0x1ED0, 0x1ED0}, {0x1ED2, 0x1ED2},
    {0x1ED4, 0x1ED4}, {0x1ED6, 0x1ED6}, {0x1ED8, 0x1ED8}, {0x1EDA, 0x1EDA},
    {0x1EDC, 0x1EDC}, {0x1EDE, 0x1EDE}, {0x1EE0, 0x1EE0}, {0x1EE2, 0x1EE2},
    {0x1EE4, 0x1EE4}, {0x1EE6, 0x1EE6}, {0x1EE8, 0x1EE8}, {0x1EEA, 0x1EEA},
    {0x1EEC, 0x1EEC}, {0x1EEE, 0x1EEE}, {0x1EF0, 0x1EF0}, {0x1EF2, 0x1EF2},
    {0x1EF4, 0x1EF4}, {0x1EF6, 0x1EF6}, {0x1EF8, 0x1EF8}, {0x1EFA, 0x1EFA},
    {0x1EFC, 0x1EFC}, {0x1EFE, 0x1EFE}, {0x1F08, 0x1F0F}, {0x1F18, 0x1F1D},
    {0x1F28, 0x1F2F}, {0x1F38, 0x1F3F}, {0x1F48, 0x1F4D}, {0x1F59, 0x1F59},
    {0x1F5B, 0x1F5B}, {0x1F5D, 0x1F5D}, {0x1F5F, 0x1F5F}, {0x1F68, 0x1F6F},
    {0x1FB8, 0x1FBB}, {0x1FC8, 0x1FCB}, {0x1FD8, 0x1FDB}, {0x1FE8, 0x1FEC},
    {0x1FF8, 0x1FFB}, {0x2102, 0x2102}, {0x2107, 0x2107}, {0x210B, 0x210D},
    {0x2110, 0x2112}, {0x2115, 0x2115}, {0x2119, 0x211D}, {0x2124, 0x2124},
    {0x2126, 0x2126}, {0x2128, 0x2128}, {0x212A, 0x212D}, {0x2130, 0x2133},
    {0x213E, 0x213F}, {0x2145, 0x2145}, {0x2183, 0x2183}, {0x2C00, 0x2C2E},
    {0x2C60, 0x2C60}, {0x2C62, 0x2C64}, {0x2C67, 0x2C67}, {0x2C69, 0x2C69},
    {0x2C6B, 0x2C6B}, {0x2C6D, 0x2C70}, {0x2C72, 0x2C72}, {0x2C75, 0x2C75},
    {0x2C7E, 0x2C80}, {0x2C82, 0x2C82}, {0x2C84, 0x2C84}, {0x2C86, 0x2C86},
    {0x2C88, 0x2C88}, {0x2C8A, 0x2C8A}, {0x2C8C, 0x2C8C}, {0x2C8E, 0x2C8E},
    {0x2C90, 0x2C90}, {0x2C92, 0x2C92}, {0x2C94, 0x2C94}, {0x2C96, 0x2C96},
    {0x2C98, 0x2C98}, {0x2C9A, 0x2C9A}, {0x2C9C, 0x2C9C}, {0x2C9E, 0x2C9E},
    {0x2CA0, 0x2CA0}, {0x2CA2, 0x2CA2}, {0x2CA4, 0x2CA4}, {0x2CA6, 0x2CA6},
    {0x2CA8, 0x2CA8}, {0x2CAA, 0x2CAA}, {0x2CAC, 0x2CAC}, {0x2CAE, 0x2CAE},
    {0x2CB0, 0x2CB0}, {0x2CB2, 0x2CB2}, {0x2CB4, 0x2CB4}, {0x2CB6, 0x2CB6},
    {0x2CB8, 0x2CB8}, {0x2CBA, 0x2CBA}, {0x2CBC, 0x2CBC}, {0x2CBE, 0x2CBE},
    {0x2CC0, 0x2CC0}, {0x2CC2, 0x2CC2}, {0x2CC4, 0x2CC4}, {0x2CC6, 0x2CC6},
    {0x2CC8, 0x2CC8}, {0x2CCA, 0x2CCA}, {0x2CCC, 0x2CCC}, {0x2CCE, 0x2CCE},
    {0x2CD0, 0x2CD0}, {0x2CD2, 0x2CD2}, {0x2CD4, 0x2CD4}, {0x2CD6, 0x2CD6},
    {0x2CD8, 0x2CD8}, {0x2CDA, 0x2CDA}, {0x2CDC, 0x2CDC}, {0x2CDE, 0x2CDE},
    {0x2CE0, 0x2CE0}, {0x2CE2, 0x2CE2}, {0x2CEB, 0x2CEB}, {0x2CED, 0x2CED},
    {0x2CF2, 0x2CF2}, {0xA640, 0xA640}, {0xA642, 0xA642}, {0xA644, 0xA644},
    {0xA646, 0xA646}, {0xA648, 0xA648}, {0xA64A, 0xA64A}, {0xA64C, 0xA64C},
    {0xA64E, 0xA64E}, {0xA650, 0xA650}, {0xA652, 0xA652}, {0xA654, 0xA654},
    {0xA656, 0xA656}, {0xA658, 0xA658}, {0xA65A, 0xA65A}, {0xA65C, 0xA65C},
    {0xA65E, 0xA65E}, {0xA660, 0xA660}, {0xA662, 0xA662}, {0xA664, 0xA664},
    {0xA666, 0xA666}, {0xA668, 0xA668}, {0xA66A, 0xA66A}, {0xA66C, 0xA66C},
    {0xA680, 0xA680}, {0xA682, 0xA682}, {0xA684, 0xA684}, {0xA686, 0xA686},
    {0xA688, 0xA688}, {0xA68A, 0xA68A}, {0xA68C, 0xA68C}, {0xA68E, 0xA68E},
    {0xA690, 0xA690}, {0xA692, 0xA692}, {0xA694, 0xA694}, {0xA696, 0xA696},
    {0xA698, 0xA698}, {0xA69A, 0xA69A}, {0xA722, 0xA722}, {0xA724, 0xA724},
    {0xA726, 0xA726}, {0xA728, 0xA728}, {0xA72A, 0xA72A}, {0xA72C, 0xA72C},
    {0xA72E, 0xA72E}, {0xA732, 0xA732}, {0xA734, 0xA734}, {0xA736, 0xA736},
    {0xA738, 0xA738}, {0xA73A, 0xA73A}, {0xA73C, 0xA73C}, {0xA73E, 0xA73E},
    {0xA740, 0xA740}, {0xA742, 0xA742}, {0xA744, 0xA744}, {0xA746, 0xA746},
    {0xA748, 0xA748}, {0xA74A, 0xA74A}, {0xA74C, 0xA74C}, {0xA74E, 0xA74E},
    {0xA750, 0xA750}, {0xA752, 0xA752}, {0xA754, 0xA754}, {0xA756, 0xA756},
    {0xA758, 0xA758}, {0xA75A, 0xA75A}, {0xA75C, 0xA75C}, {0xA75E, 0xA75E},
    {0xA760, 0xA760}, {0xA762, 0xA762}, {0xA764, 0xA764}, {0xA766, 0xA766},
    {0xA768, 0xA768}, {0xA76A, 0xA76A}, {0xA76C, 0xA76C}, {0xA76E, 0xA76E},
    {0xA779, 0xA779}, {0xA77B, 0xA77B}, {0xA77D, 0xA77E}, {0xA780, 0xA780},
    {0xA782, 0xA782}, {0xA784, 0xA784}, {0xA786, 0xA786}, {0xA78B, 0xA78B},
    {0xA78D, 0xA78D}, {0xA790, 0xA790}, {0xA792, 0xA792}, {0xA796, 0xA796},
    {0xA798, 0xA798}, {0xA79A, 0xA79A}, {0xA79C, 0xA79C}, {0xA79E, 0xA79E},
    {0xA7A0, 0xA7A0}, {0xA7A2, 0xA7A2}, {0xA7A4, 0xA7A4}, {0xA7A6, 0xA7A6},
    {0xA7A8, 0xA7A8}, {0xA7AA, 0xA7AE}, {0xA7B0, 0xA7B4}, {0xA7B6, 0xA7B6},
    {0xA7B8, 0xA7B8}, {0xA7BA, 0xA7BA}, {0xA7BC, 0xA7BC}, {0xA7BE, 0xA7BE},
    {0xA7C2, 0xA7C2}, {0xA7C4, 0xA7C7}, {0xA7C9, 0xA7C9}, {0xA7F5, 0xA7F5},
    {0xFF21, 0xFF3A}, {0x10400, 0x10427}, {0x104B0, 0x104D3}, {0x10C80, 0x10CB2},
    {0x118A0, 0x118BF}, {0x16E40, 0x16E5F}, {0x1D400, 0x1D419}, {0x1D434, 0x1D44D},
    {0x1D468, 0x1D481}, {0x1D49C, 0x1D49C}, {0x1D49E, 0x1D49F}, {0x1D4A2, 0x1D4A2},
    {0x1D4A5, 0x1D4A6}, {0x1D4A9, 0x1D4AC}, {0x1D4AE, 0x1D4B5}, {0x1D4D0, 0x1D4E9},
    {0x1D504, 0x1D505}, {0x1D507, 0x1D50A}, {0x1D50D, 0x1D514}, {0x1D516, 0x1D51C},
    {0x1D538, 0x1D539}, {0x1D53B, 0x1D53E}, {0x1D540, 0x1D544}, {0x1D546, 0x1D546},
    {0x1D54A, 0x1D550}, {0x1D56C, 0x1D585}, {0x1D5A0, 0x1D5B9}, {0x1D5D4, 0x1D5ED},
    {0x1D608, 0x1D621}, {0x1D63C, 0x1D655}, {0x1D670, 0x1D689}, {0x1D6A8, 0x1D6C0},
    {0x1D6E2, 0x1D6FA}, {0x1D71C, 0x1D734}, {0x1D756, 0x1D76E}, {0x1D790, 0x1D7A8},
    {0x1D7CA, 0x1D7CA}, {0x1E900, 0x1E921},
};

inline constexpr CpRange kDecimalDigit[] = {
    {0x30, 0x39}, {0x660, 0x669}, {0x6F0, 0x6F9}, {0x7C0, 0x7C9},
    {0x966, 0x96F}, {0x9E6, 0x9EF}, {0xA66, 0xA6F}, {0xAE6, 0xAEF},
    {0xB66, 0xB6F}, {0xBE6, 0xBEF}, {0xC66, 0xC6F}, {0xCE6, 0xCEF},
    {0xD66, 0xD6F}, {0xDE6, 0xDEF}, {0xE50, 0xE59}, {0xED0, 0xED9},
    {0xF20, 0xF29}, {0x1040, 0x1049}, {0x1090, 0x1099}, {0x17E0, 0x17E9},
    {0x1810, 0x1819}, {0x1946, 0x194F}, {0x19D0, 0x19D9}, {0x1A80, 0x1A89},
    {0x1A90, 0x1A99}, {0x1B50, 0x1B59}, {0x1BB0, 0x1BB9}, {0x1C40, 0x1C49},
    {0x1C50, 0x1C59}, {0xA620, 0xA629}, {0xA8D0, 0xA8D9}, {0xA900, 0xA909},
    {0xA9D0, 0xA9D9}, {0xA9F0, 0xA9F9}, {0xAA50, 0xAA59}, {0xABF0, 0xABF9},
    {0xFF10, 0xFF19}, {0x104A0, 0x104A9}, {0x10D30, 0x10D39}, {0x11066, 0x1106F},
    {0x110F0, 0x110F9}, {0x11136, 0x1113F}, {0x111D0, 0x111D9}, {0x112F0, 0x112F9},
    {0x11450, 0x11459}, {0x114D0, 0x114D9}, {0x11650, 0x11659}, {0x116C0, 0x116C9},
    {0x11730, 0x11739}, {0x118E0, 0x118E9}, {0x11950, 0x11959}, {0x11C50, 0x11C59},
    {0x11D50, 0x11D59}, {0x11DA0, 0x11DA9}, {0x16A60, 0x16A69}, {0x16B50, 0x16B59},
    {0x1D7CE, 0x1D7FF}, {0x1E140, 0x1E149}, {0x1E2F0, 0x1E2F9}, {0x1E950, 0x1E959},
    {0x1FBF0, 0x1FBF9},
};

inline constexpr FoldEntry kFoldEntries[] = {
    {0xC0, 0, 1}, {0xC1, 1, 1}, {0xC2, 2, 1}, {0xC3, 3, 1},
    {0xC4, 4, 1}, {0xC5, 5, 1}, {0xC7, 6, 1}, {0xC8, 7, 1},
    {0xC9, 8, 1}, {0xCA, 9, 1}, {0xCB, 10, 1}, {0xCC, 11, 1},
    {0xCD, 12, 1}, {0xCE, 13, 1}, {0xCF, 14, 1}, {0xD1, 15, 1},
    {0xD2, 16, 1}, {0xD3, 17, 1}, {0xD4, 18, 1}, {0xD5, 19, 1},
    {0xD6, 20, 1}, {0xD9, 21, 1}, {0xDA, 22, 1}, {0xDB, 23, 1},
    {0xDC, 24, 1}, {0xDD, 25, 1}, {0xE0, 26, 1}, {0xE1, 27, 1},
    {0xE2, 28, 1}, {0xE3, 29, 1}, {0xE4, 30, 1}, {0xE5, 31, 1},
    {0xE7, 32, 1}, {0xE8, 33, 1}, {0xE9, 34, 1}, {0xEA, 35, 1},
    {0xEB, 36, 1}, {0xEC, 37, 1}, {0xED, 38, 1}, {0xEE, 39, 1},
    {0xEF, 40, 1}, {0xF1, 41, 1}, {0xF2, 42, 1}, {0xF3, 43, 1},
    {0xF4, 44, 1}, {0xF5, 45, 1}, {0xF6, 46, 1}, {0xF9, 47, 1},
    {0xFA, 48, 1}, {0xFB, 49, 1}, {0xFC, 50, 1}, {0xFD, 51, 1},
    {0xFF, 52, 1}, {0x100, 53, 1}, {0x101, 54, 1}, {0x102, 55, 1},
    {0x103, 56, 1}, {0x104, 57, 1}, {0x105, 58, 1}, {0x106, 59, 1},
    {0x107, 60, 1}, {0x108, 61, 1}, {0x109, 62, 1}, {0x10A, 63, 1},
    {0x10B, 64, 1}, {0x10C, 65, 1}, {0x10D, 66, 1}, {0x10E, 67, 1},
    {0x10F, 68, 1}, {0x112, 69, 1}, {0x113, 70, 1}, {0x114, 71, 1},
    {0x115, 72, 1}, {0x116, 73, 1}, {0x117, 74, 1}, {0x118, 75, 1},
    {0x119, 76, 1}, {0x11A, 77, 1}, {0x11B, 78, 1}, {0x11C, 79, 1},
    {0x11D, 80, 1}, {0x11E, 81, 1}, {0x11F, 82, 1}, {0x120, 83, 1},
    {0x121, 84, 1}, {0x122, 85, 1}, {0x123, 86, 1}, {0x124, 87, 1},
    {0x125, 88, 1}, {0x128, 89, 1}, {0x129, 90, 1}, {0x12A, 91, 1},
    {0x12B, 92, 1}, {0x12C, 93, 1}, {0x12D, 94, 1}, {0x12E, 95, 1},
    {0x12F, 96, 1}, {0x130, 97, 1}, {0x134, 98, 1}, {0x135, 99, 1},
    {0x136, 100, 1}, {0x137, 101, 1}, {0x139, 102, 1}, {0x13A, 103, 1},
    {0x13B, 104, 1}, {0x13C, 105, 1}, {0x13D, 106, 1}, {0x13E, 107, 1},
    {0x143, 108, 1}, {0x144, 109, 1}, {0x145, 110, 1}, {0x146, 111, 1},
    {0x147, 112, 1}, {0x148, 113, 1}, {0x14C, 114, 1}, {0x14D, 115, 1},
    {0x14E, 116, 1}, {0x14F, 117, 1}, {0x150, 118, 1}, {0x151, 119, 1},
    {0x154, 120, 1}, {0x155, 121, 1}, {0x156, 122, 1}, {0x157, 123, 1},
    {0x158, 124, 1}, {0x159, 125, 1}, {0x15A, 126, 1}, {0x15B, 127, 1},
    {0x15C, 128, 1}, {0x15D, 129, 1}, {0x15E, 130, 1}, {0x15F, 131, 1},
    {0x160, 132, 1}, {0x161, 133, 1}, {0x162, 134, 1}, {0x163, 135, 1},
    {0x164, 136, 1}, {0x165, 137, 1}, {0x168, 138, 1}, {0x169, 139, 1},
    {0x16A, 140, 1}, {0x16B, 141, 1}, {0x16C, 142, 1}, {0x16D, 143, 1},
    {0x16E, 144, 1}, {0x16F, 145, 1}, {0x170, 146, 1}, {0x171, 147, 1},
    {0x172, 148, 1}, {0x173, 149, 1}, {0x174, 150, 1}, {0x175, 151, 1},
    {0x176, 152, 1}, {0x177, 153, 1}, {0x178, 154, 1}, {0x179, 155, 1},
    {0x17A, 156, 1}, {0x17B, 157, 1}, {0x17C, 158, 1}, {0x17D, 159, 1},
    {0x17E, 160, 1}, {0x1A0, 161, 1}, {0x1A1, 162, 1}, {0x1AF, 163, 1},
    {0x1B0, 164, 1}, {0x1CD, 165, 1}, {0x1CE, 166, 1}, {0x1CF, 167, 1},
    {0x1D0, 168, 1}, {0x1D1, 169, 1}, {0x1D2, 170, 1}, {0x1D3, 171, 1},
    {0x1D4, 172, 1}, {0x1D5, 173, 1}, {0x1D6, 174, 1}, {0x1D7, 175, 1},
    {0x1D8, 176, 1}, {0x1D9, 177, 1}, {0x1DA, 178, 1}, {0x1DB, 179, 1},
    {0x1DC, 180, 1}, {0x1DE, 181, 1}, {0x1DF, 182, 1}, {0x1E0, 183, 1},
    {0x1E1, 184, 1}, {0x1E2, 185, 2}, {0x1E3, 187, 2}, {0x1E6, 189, 1},
    {0x1E7, 190, 1}, {0x1E8, 191, 1}, {0x1E9, 192, 1}, {0x1EA, 193, 1},
    {0x1EB, 194, 1}, {0x1EC, 195, 1}, {0x1ED, 196, 1}, {0x1EE, 197, 2},
    {0x1EF, 199, 2}, {0x1F0, 201, 1}, {0x1F4, 202, 1}, {0x1F5, 203, 1},
    {0x1F8, 204, 1}, {0x1F9, 205, 1}, {0x1FA, 206, 1}, {0x1FB, 207, 1},
    {0x1FC, 208, 2}, {0x1FD, 210, 2}, {0x1FE, 212, 2}, {0x1FF, 214, 2},
    {0x200, 216, 1}, {0x201, 217, 1}, {0x202, 218, 1}, {0x203, 219, 1},
    {0x204, 220, 1}, {0x205, 221, 1}, {0x206, 222, 1}, {0x207, 223, 1},
    {0x208, 224, 1}, {0x209, 225, 1}, {0x20A, 226, 1}, {0x20B, 227, 1},
    {0x20C, 228, 1}, {0x20D, 229, 1}, {0x20E, 230, 1}, {0x20F, 231, 1},
    {0x210, 232, 1}, {0x211, 233, 1}, {0x212, 234, 1}, {0x213, 235, 1},
    {0x214, 236, 1}, {0x215, 237, 1}, {0x216, 238, 1}, {0x217, 239, 1},
    {0x218, 240, 1}, {0x219, 241, 1}, {0x21A, 242, 1}, {0x21B, 243, 1},
    {0x21E, 244, 1}, {0x21F, 245, 1}, {0x226, 246, 1}, {0x227, 247, 1},
    {0x228, 248, 1}, {0x229, 249, 1}, {0x22A, 250, 1}, {0x22B, 251, 1},
    {0x22C, 252, 1}, {0x22D, 253, 1}, {0x22E, 254, 1}, {0x22F, 255, 1},
    {0x230, 256, 1}, {0x231, 257, 1}, {0x232, 258, 1}, {0x233, 259, 1},
    {0x300, 260, 0}, {0x301, 260, 0}, {0x302, 260, 0}, {0x303, 260, 0},
    {0x304, 260, 0}, {0x305, 260, 0}, {0x306, 260, 0}, {0x307, 260, 0},
    {0x308, 260, 0}, {0x309, 260, 0}, {0x30A, 260, 0}, {0x30B, 260, 0},
    {0x30C, 260, 0}, {0x30D, 260, 0}, {0x30E, 260, 0}, {0x30F, 260, 0},
    {0x310, 260, 0}, {0x311, 260, 0}, {0x312, 260, 0}, {0x313, 260, 0},
    {0x314, 260, 0}, {0x315, 260, 0}, {0x316, 260, 0}, {0x317, 260, 0},
    {0x318, 260, 0}, {0x319, 260, 0}, {0x31A, 260, 0}, {0x31B, 260, 0},
    {0x31C, 260, 0}, {0x31D, 260, 0}, {0x31E, 260, 0}, {0x31F, 260, 0},
    {0x320, 260, 0}, {0x321, 260, 0}, {0x322, 260, 0}, {0x323, 260, 0},
    {0x324, 260, 0}, {0x325, 260, 0}, {0x326, 260, 0}, {0x327, 260, 0},
    {0x328, 260, 0}, {0x329, 260, 0}, {0x32A, 260, 0}, {0x32B, 260, 0},
    {0x32C, 260, 0}, {0x32D, 260, 0}, {0x32E, 260, 0}, {0x32F, 260, 0},
    {0x330, 260, 0}, {0x331, 260, 0}, {0x332, 260, 0}, {0x333, 260, 0},
    {0x334, 260, 0}, {0x335, 260, 0}, {0x336, 260, 0}, {0x337, 260, 0},
    {0x338, 260, 0}, {0x339, 260, 0}, {0x33A, 260, 0}, {0x33B, 260, 0},
    {0x33C, 260, 0}, {0x33D, 260, 0}, {0x33E, 260, 0}, {0x33F, 260, 0},
    {0x340, 260, 0}, {0x341, 260, 0}, {0x342, 260, 0}, {0x343, 260, 0},
    {0x344, 260, 0}, {0x345, 260, 0}, {0x346, 260, 0}, {0x347, 260, 0},
    {0x348, 260, 0}, {0x349, 260, 0}, {0x34A, 260, 0}, {0x34B, 260, 0},
    {0x34C, 260, 0}, {0x34D, 260, 0}, {0x34E, 260, 0}, {0x34F, 260, 0},
    {0x350, 260, 0}, {0x351, 260, 0}, {0x352, 260, 0}, {0x353, 260, 0},
    {0x354, 260, 0}, {0x355, 260, 0}, {0x356, 260, 0}, {0x357, 260, 0},
    {0x358, 260, 0}, {0x359, 260, 0}, {0x35A, 260, 0}, {0x35B, 260, 0},
    {0x35C, 260, 0}, {0x35D, 260, 0}, {0x35E, 260, 0}, {0x35F, 260, 0},
    {0x360, 260, 0}, {0x361, 260, 0}, {0x362, 260, 0}, {0x363, 260, 0},
    {0x364, 260, 0}, {0x365, 260, 0}, {0x366, 260, 0}, {0x367, 260, 0},
    {0x368, 260, 0}, {0x369, 260, 0}, {0x36A, 260, 0}, {0x36B, 260, 0},
    {0x36C, 260, 0}, {0x36D, 260, 0}, {0x36E, 260, 0}, {0x36F, 260, 0},
    {0x374, 260, 2}, {0x37E, 262, 1}, {0x385, 263, 2}, {0x386, 265, 2},
    {0x387, 267, 2}, {0x388, 269, 2}, {0x389, 271, 2}, {0x38A, 273, 2},
    {0x38C, 275, 2}, {0x38E, 277, 2}, {0x38F, 279, 2}, {0x390, 281, 2},
    {0x3AA, 283, 2}, {0x3AB, 285, 2}, {0x3AC, 287, 2}, {0x3AD, 289, 2},
    {0x3AE, 291, 2}, {0x3AF, 293, 2}, {0x3B0, 295, 2}, {0x3CA, 297, 2},
    {0x3CB, 299, 2}, {0x3CC, 301, 2}, {0x3CD, 303, 2}, {0x3CE, 305, 2},
    {0x3D3, 307, 2}, {0x3D4, 309, 2}, {0x400, 311, 2}, {0x401, 313, 2},
    {0x403, 315, 2}, {0x407, 317, 2}, {0x40C, 319, 2}, {0x40D, 321, 2},
    {0x40E, 323, 2}, {0x419, 325, 2}, {0x439, 327, 2}, {0x450, 329, 2},
    {0x451, 331, 2}, {0x453, 333, 2}, {0x457, 335, 2}, {0x45C, 337, 2},
    {0x45D, 339, 2}, {0x45E, 341, 2}, {0x476, 343, 2}, {0x477, 345, 2},
    {0x483, 347, 0}, {0x484, 347, 0}, {0x485, 347, 0}, {0x486, 347, 0},
    {0x487, 347, 0}, {0x4C1, 347, 2}, {0x4C2, 349, 2}, {0x4D0, 351, 2},
    {0x4D1, 353, 2}, {0x4D2, 355, 2}, {0x4D3, 357, 2}, {0x4D6, 359, 2},
    {0x4D7, 361, 2}, {0x4DA, 363, 2}, {0x4DB, 365, 2}, {0x4DC, 367, 2},
    {0x4DD, 369, 2}, {0x4DE, 371, 2}, {0x4DF, 373, 2}, {0x4E2, 375, 2},
    {0x4E3, 377, 2}, {0x4E4, 379, 2}, {0x4E5, 381, 2}, {0x4E6, 383, 2},
    {0x4E7, 385, 2}, {0x4EA, 387, 2}, {0x4EB, 389, 2}, {0x4EC, 391, 2},
    {0x4ED, 393, 2}, {0x4EE, 395, 2}, {0x4EF, 397, 2}, {0x4F0, 399, 2},
    {0x4F1, 401, 2}, {0x4F2, 403, 2}, {0x4F3, 405, 2}, {0x4F4, 407, 2},
    {0x4F5, 409, 2}, {0x4F8, 411, 2}, {0x4F9, 413, 2}, {0x591, 415, 0},
    {0x592, 415, 0}, {0x593, 415, 0}, {0x594, 415, 0}, {0x595, 415, 0},
    {0x596, 415, 0}, {0x597, 415, 0}, {0x598, 415, 0}, {0x599, 415, 0},
    {0x59A, 415, 0}, {0x59B, 415, 0}, {0x59C, 415, 0}, {0x59D, 415, 0},
    {0x59E, 415, 0}, {0x59F, 415, 0}, {0x5A0, 415, 0}, {0x5A1, 415, 0},
    {0x5A2, 415, 0}, {0x5A3, 415, 0}, {0x5A4, 415, 0}, {0x5A5, 415, 0},
    {0x5A6, 415, 0}, {0x5A7, 415, 0}, {0x5A8, 415, 0}, {0x5A9, 415, 0},
    {0x5AA, 415, 0}, {0x5AB, 415, 0}, {0x5AC, 415, 0}, {0x5AD, 415, 0},
    {0x5AE, 415, 0}, {0x5AF, 415, 0}, {0x5B0, 415, 0}, {0x5B1, 415, 0},
    {0x5B2, 415, 0}, {0x5B3, 415, 0}, {0x5B4, 415, 0}, {0x5B5, 415, 0},
    {0x5B6, 415, 0}, {0x5B7, 415, 0}, {0x5B8, 415, 0}, {0x5B9, 415, 0},
    {0x5BA, 415, 0}, {0x5BB, 415, 0}, {0x5BC, 415, 0}, {0x5BD, 415, 0},
    {0x5BF, 415, 0}, {0x5C1, 415, 0}, {0x5C2, 415, 0}, {0x5C4, 415, 0},
    {0x5C5, 415, 0}, {0x5C7, 415, 0}, {0x610, 415, 0}, {0x611, 415, 0},
    {0x612, 415, 0}, {0x613, 415, 0}, {0x614, 415, 0}, {0x615, 415, 0},
    {0x616, 415, 0}, {0x617, 415, 0}, {0x618, 415, 0}, {0x619, 415, 0},
    {0x61A, 415, 0}, {0x622, 415, 2}, {0x623, 417, 2}, {0x624, 419, 2},
    {0x625, 421, 2}, {0x626, 423, 2}, {0x64B, 425, 0}, {0x64C, 425, 0},
    {0x64D, 425, 0}, {0x64E, 425, 0}, {0x64F, 425, 0}, {0x650, 425, 0},
    {0x651, 425, 0}, {0x652, 425, 0}, {0x653, 425, 0}, {0x654, 425, 0},
    {0x655, 425, 0}, {0x656, 425, 0}, {0x657, 425, 0}, {0x658, 425, 0},
    {0x659, 425, 0}, {0x65A, 425, 0}, {0x65B, 425, 0}, {0x65C, 425, 0},
    {0x65D, 425, 0}, {0x65E, 425, 0}, {0x65F, 425, 0}, {0x670, 425, 0},
    {0x6C0, 425, 2}, {0x6C2, 427, 2}, {0x6D3, 429, 2}, {0x6D6, 431, 0},
    {0x6D7, 431, 0}, {0x6D8, 431, 0}, {0x6D9, 431, 0}, {0x6DA, 431, 0},
    {0x6DB, 431, 0}, {0x6DC, 431, 0}, {0x6DF, 431, 0}, {0x6E0, 431, 0},
    {0x6E1, 431, 0}, {0x6E2, 431, 0}, {0x6E3, 431, 0}, {0x6E4, 431, 0},
    {0x6E7, 431, 0}, {0x6E8, 431, 0}, {0x6EA, 431, 0}, {0x6EB, 431, 0},
    {0x6EC, 431, 0}, {0x6ED, 431, 0}, {0x711, 431, 0}, {0x730, 431, 0},
    {0x731, 431, 0}, {0x732, 431, 0}, {0x733, 431, 0}, {0x734, 431, 0},
    {0x735, 431, 0}, {0x736, 431, 0}, {0x737, 431, 0}, {0x738, 431, 0},
    {0x739, 431, 0}, {0x73A, 431, 0}, {0x73B, 431, 0}, {0x73C, 431, 0},
    {0x73D, 431, 0}, {0x73E, 431, 0}, {0x73F, 431, 0}, {0x740, 431, 0},
    {0x741, 431, 0}, {0x742, 431, 0}, {0x743, 431, 0}, {0x744, 431, 0},
    {0x745, 431, 0}, {0x746, 431, 0}, {0x747, 431, 0}, {0x748, 431, 0},
    {0x749, 431, 0}, {0x74A, 431, 0}, {0x7A6, 431, 0}, {0x7A7, 431, 0},
    {0x7A8, 431, 0}, {0x7A9, 431, 0}, {0x7AA, 431, 0}, {0x7AB, 431, 0},
    {0x7AC, 431, 0}, {0x7AD, 431, 0}, {0x7AE, 431, 0}, {0x7AF, 431, 0},
    {0x7B0, 431, 0}, {0x7EB, 431, 0}, {0x7EC, 431, 0}, {0x7ED, 431, 0},
    {0x7EE, 431, 0}, {0x7EF, 431, 0}, {0x7F0, 431, 0}, {0x7F1, 431, 0},
    {0x7F2, 431, 0}, {0x7F3, 431, 0}, {0x7FD, 431, 0}, {0x816, 431, 0},
    {0x817, 431, 0}, {0x818, 431, 0}, {0x819, 431, 0}, {0x81B, 431, 0},
    {0x81C, 431, 0}, {0x81D, 431, 0}, {0x81E, 431, 0}, {0x81F, 431, 0},
    {0x820, 431, 0}, {0x821, 431, 0}, {0x822, 431, 0}, {0x823, 431, 0},
    {0x825, 431, 0}, {0x826, 431, 0}, {0x827, 431, 0}, {0x829, 431, 0},
    {0x82A, 431, 0}, {0x82B, 431, 0}, {0x82C, 431, 0}, {0x82D, 431, 0},
    {0x859, 431, 0}, {0x85A, 431, 0}, {0x85B, 431, 0}, {0x8D3, 431, 0},
    {0x8D4, 431, 0}, {0x8D5, 431, 0}, {0x8D6, 431, 0}, {0x8D7, 431, 0},
    {0x8D8, 431, 0}, {0x8D9, 431, 0}, {0x8DA, 431, 0}, {0x8DB, 431, 0},
    {0x8DC, 431, 0}, {0x8DD, 431, 0}, {0x8DE, 431, 0}, {0x8DF, 431, 0},
    {0x8E0, 431, 0}, {0x8E1, 431, 0}, {0x8E3, 431, 0}, {0x8E4, 431, 0},
    {0x8E5, 431, 0}, {0x8E6, 431, 0}, {0x8E7, 431, 0}, {0x8E8, 431, 0},
    {0x8E9, 431, 0}, {0x8EA, 431, 0}, {0x8EB, 431, 0}, {0x8EC, 431, 0},
    {0x8ED, 431, 0}, {0x8EE, 431, 0}, {0x8EF, 431, 0}, {0x8F0, 431, 0},
    {0x8F1, 431, 0}, {0x8F2, 431, 0}, {0x8F3, 431, 0}, {0x8F4, 431, 0},
    {0x8F5, 431, 0}, {0x8F6, 431, 0}, {0x8F7, 431, 0}, {0x8F8, 431, 0},
    {0x8F9, 431, 0}, {0x8FA, 431, 0}, {0x8FB, 431, 0}, {0x8FC, 431, 0},
    {0x8FD, 431, 0}, {0x8FE, 431, 0}, {0x8FF, 431, 0}, {0x900, 431, 0},
    {0x901, 431, 0}, {0x902, 431, 0}, {0x929, 431, 3}, {0x931, 434, 3},
    {0x934, 437, 3}, {0x93A, 440, 0}, {0x93C, 440, 0}, {0x941, 440, 0},
    {0x942, 440, 0}, {0x943, 440, 0}, {0x944, 440, 0}, {0x945, 440, 0},
    {0x946, 440, 0}, {0x947, 440, 0}, {0x948, 440, 0}, {0x94D, 440, 0},
    {0x951, 440, 0}, {0x952, 440, 0}, {0x953, 440, 0}, {0x954, 440, 0},
    {0x955, 440, 0}, {0x956, 440, 0}, {0x957, 440, 0}, {0x958, 440, 3},
    {0x959, 443, 3}, {0x95A, 446, 3}, {0x95B, 449, 3}, {0x95C, 452, 3},
    {0x95D, 455, 3}, {0x95E, 458, 3}, {0x95F, 461, 3}, {0x962, 464, 0},
    {0x963, 464, 0}, {0x981, 464, 0}, {0x9BC, 464, 0}, {0x9C1, 464, 0},
    {0x9C2, 464, 0}, {0x9C3, 464, 0}, {0x9C4, 464, 0}, {0x9CD, 464, 0},
    {0x9DC, 464, 3}, {0x9DD, 467, 3}, {0x9DF, 470, 3}, {0x9E2, 473, 0},
    {0x9E3, 473, 0}, {0x9FE, 473, 0}, {0xA01, 473, 0}, {0xA02, 473, 0},
    {0xA33, 473, 3}, {0xA36, 476, 3}, {0xA3C, 479, 0}, {0xA41, 479, 0},
    {0xA42, 479, 0}, {0xA47, 479, 0}, {0xA48, 479, 0}, {0xA4B, 479, 0},
    {0xA4C, 479, 0}, {0xA4D, 479, 0}, {0xA51, 479, 0}, {0xA59, 479, 3},
    {0xA5A, 482, 3}, {0xA5B, 485, 3}, {0xA5E, 488, 3}, {0xA70, 491, 0},
    {0xA71, 491, 0}, {0xA75, 491, 0}, {0xA81, 491, 0}, {0xA82, 491, 0},
    {0xABC, 491, 0}, {0xAC1, 491, 0}, {0xAC2, 491, 0}, {0xAC3, 491, 0},
    {0xAC4, 491, 0}, {0xAC5, 491, 0}, {0xAC7, 491, 0}, {0xAC8, 491, 0},
    {0xACD, 491, 0}, {0xAE2, 491, 0}, {0xAE3, 491, 0}, {0xAFA, 491, 0},
    {0xAFB, 491, 0}, {0xAFC, 491, 0}, {0xAFD, 491, 0}, {0xAFE, 491, 0},
    {0xAFF, 491, 0}, {0xB01, 491, 0}, {0xB3C, 491, 0}, {0xB3F, 491, 0},
    {0xB41, 491, 0}, {0xB42, 491, 0}, {0xB43, 491, 0}, {0xB44, 491, 0},
    {0xB48, 491, 3}, {0xB4D, 494, 0}, {0xB55, 494, 0}, {0xB56, 494, 0},
    {0xB5C, 494, 3}, {0xB5D, 497, 3}, {0xB62, 500, 0}, {0xB63, 500, 0},
    {0xB82, 500, 0}, {0xBC0, 500, 0}, {0xBCD, 500, 0}, {0xC00, 500, 0},
    {0xC04, 500, 0}, {0xC3E, 500, 0}, {0xC3F, 500, 0}, {0xC40, 500, 0},
    {0xC46, 500, 0}, {0xC47, 500, 0}, {0xC48, 500, 0}, {0xC4A, 500, 0},
    {0xC4B, 500, 0}, {0xC4C, 500, 0}, {0xC4D, 500, 0}, {0xC55, 500, 0},
    {0xC56, 500, 0}, {0xC62, 500, 0}, {0xC63, 500, 0}, {0xC81, 500, 0},
    {0xCBC, 500, 0}, {0xCBF, 500, 0}, {0xCC0, 500, 3}, {0xCC6, 503, 0},
    {0xCC7, 503, 3}, {0xCC8, 506, 3}, {0xCCA, 509, 3}, {0xCCB, 512, 6},
    {0xCCC, 518, 0}, {0xCCD, 518, 0}, {0xCE2, 518, 0}, {0xCE3, 518, 0},
    {0xD00, 518, 0}, {0xD01, 518, 0}, {0xD3B, 518, 0}, {0xD3C, 518, 0},
    {0xD41, 518, 0}, {0xD42, 518, 0}, {0xD43, 518, 0}, {0xD44, 518, 0},
    {0xD4D, 518, 0}, {0xD62, 518, 0}, {0xD63, 518, 0}, {0xD81, 518, 0},
    {0xDCA, 518, 0}, {0xDD2, 518, 0}, {0xDD3, 518, 0}, {0xDD4, 518, 0},
    {0xDD6, 518, 0}, {0xDDA, 518, 3}, {0xDDD, 521, 3}, {0xE31, 524, 0},
    {0xE34, 524, 0}, {0xE35, 524, 0}, {0xE36, 524, 0}, {0xE37, 524, 0},
    {0xE38, 524, 0}, {0xE39, 524, 0}, {0xE3A, 524, 0}, {0xE47, 524, 0},
    {0xE48, 524, 0}, {0xE49, 524, 0}, {0xE4A, 524, 0}, {0xE4B, 524, 0},
    {0xE4C, 524, 0}, {0xE4D, 524, 0}, {0xE4E, 524, 0}, {0xEB1, 524, 0},
    {0xEB4, 524, 0}, {0xEB5, 524, 0}, {0xEB6, 524, 0}, {0xEB7, 524, 0},
    {0xEB8, 524, 0}, {0xEB9, 524, 0}, {0xEBA, 524, 0}, {0xEBB, 524, 0},
    {0xEBC, 524, 0}, {0xEC8, 524, 0}, {0xEC9, 524, 0}, {0xECA, 524, 0},
    {0xECB, 524, 0}, {0xECC, 524, 0}, {0xECD, 524, 0}, {0xF18, 524, 0},
    {0xF19, 524, 0}, {0xF35, 524, 0}, {0xF37, 524, 0}, {0xF39, 524, 0},
    {0xF43, 524, 3}, {0xF4D, 527, 3}, {0xF52, 530, 3}, {0xF57, 533, 3},
    {0xF5C, 536, 3}, {0xF69, 539, 3}, {0xF71, 542, 0}, {0xF72, 542, 0},
    {0xF73, 542, 0}, {0xF74, 542, 0}, {0xF75, 542, 0}, {0xF76, 542, 0},
    {0xF77, 542, 0}, {0xF78, 542, 0}, {0xF79, 542, 0}, {0xF7A, 542, 0},
    {0xF7B, 542, 0}, {0xF7C, 542, 0}, {0xF7D, 542, 0}, {0xF7E, 542, 0},
    {0xF80, 542, 0}, {0xF81, 542, 0}, {0xF82, 542, 0}, {0xF83, 542, 0},
    {0xF84, 542, 0}, {0xF86, 542, 0}, {0xF87, 542, 0}, {0xF8D, 542, 0},
    {0xF8E, 542, 0}, {0xF8F, 542, 0}, {0xF90, 542, 0}, {0xF91, 542, 0},
    {0xF92, 542, 0}, {0xF93, 542, 0}, {0xF94, 542, 0}, {0xF95, 542, 0},
    {0xF96, 542, 0}, {0xF97, 542, 0}, {0xF99, 542, 0}, {0xF9A, 542, 0},
    {0xF9B, 542, 0}, {0xF9C, 542, 0}, {0xF9D, 542, 0}, {0xF9E, 542, 0},
    {0xF9F, 542, 0}, {0xFA0, 542, 0}, {0xFA1, 542, 0}, {0xFA2, 542, 0},
    {0xFA3, 542, 0}, {0xFA4, 542, 0}, {0xFA5, 542, 0}, {0xFA6, 542, 0},
    {0xFA7, 542, 0}, {0xFA8, 542, 0}, {0xFA9, 542, 0}, {0xFAA, 542, 0},
    {0xFAB, 542, 0}, {0xFAC, 542, 0}, {0xFAD, 542, 0}, {0xFAE, 542, 0},
    {0xFAF, 542, 0}, {0xFB0, 542, 0}, {0xFB1, 542, 0}, {0xFB2, 542, 0},
    {0xFB3, 542, 0}, {0xFB4, 542, 0}, {0xFB5, 542, 0}, {0xFB6, 542, 0},
    {0xFB7, 542, 0}, {0xFB8, 542, 0}, {0xFB9, 542, 0}, {0xFBA, 542, 0},
    {0xFBB, 542, 0}, {0xFBC, 542, 0}, {0xFC6, 542, 0}, {0x1026, 542, 3},
    {0x102D, 545, 0}, {0x102E, 545, 0}, {0x102F, 545, 0}, {0x1030, 545, 0},
    {0x1032, 545, 0}, {0x1033, 545, 0}, {0x1034, 545, 0}, {0x1035, 545, 0},
    {0x1036, 545, 0}, {0x1037, 545, 0}, {0x1039, 545, 0}, {0x103A, 545, 0},
    {0x103D, 545, 0}, {0x103E, 545, 0}, {0x1058, 545, 0}, {0x1059, 545, 0},
    {0x105E, 545, 0}, {0x105F, 545, 0}, {0x1060, 545, 0}, {0x1071, 545, 0},
    {0x1072, 545, 0}, {0x1073, 545, 0}, {0x1074, 545, 0}, {0x1082, 545, 0},
    {0x1085, 545, 0}, {0x1086, 545, 0}, {0x108D, 545, 0}, {0x109D, 545, 0},
    {0x135D, 545, 0}, {0x135E, 545, 0}, {0x135F, 545, 0}, {0x1712, 545, 0},
    {0x1713, 545, 0}, {0x1714, 545, 0}, {0x1732, 545, 0}, {0x1733, 545, 0},
    {0x1734, 545, 0}, {0x1752, 545, 0}, {0x1753, 545, 0}, {0x1772, 545, 0},
    {0x1773, 545, 0}, {0x17B4, 545, 0}, {0x17B5, 545, 0}, {0x17B7, 545, 0},
    {0x17B8, 545, 0}, {0x17B9, 545, 0}, {0x17BA, 545, 0}, {0x17BB, 545, 0},
    {0x17BC, 545, 0}, {0x17BD, 545, 0}, {0x17C6, 545, 0}, {0x17C9, 545, 0},
    {0x17CA, 545, 0}, {0x17CB, 545, 0}, {0x17CC, 545, 0}, {0x17CD, 545, 0},
    {0x17CE, 545, 0}, {0x17CF, 545, 0}, {0x17D0, 545, 0}, {0x17D1, 545, 0},
    {0x17D2, 545, 0}, {0x17D3, 545, 0}, {0x17DD, 545, 0}, {0x180B, 545, 0},
    {0x180C, 545, 0}, {0x180D, 545, 0}, {0x1885, 545, 0}, {0x1886, 545, 0},
    {0x18A9, 545, 0}, {0x1920, 545, 0}, {0x1921, 545, 0}, {0x1922, 545, 0},
    {0x1927, 545, 0}, {0x1928, 545, 0}, {0x1932, 545, 0}, {0x1939, 545, 0},
    {0x193A, 545, 0}, {0x193B, 545, 0}, {0x1A17, 545, 0}, {0x1A18, 545, 0},
    {0x1A1B, 545, 0}, {0x1A56, 545, 0}, {0x1A58, 545, 0}, {0x1A59, 545, 0},
    {0x1A5A, 545, 0}, {0x1A5B, 545, 0}, {0x1A5C, 545, 0}, {0x1A5D, 545, 0},
    {0x1A5E, 545, 0}, {0x1A60, 545, 0}, {0x1A62, 545, 0}, {0x1A65, 545, 0},
    {0x1A66, 545, 0}, {0x1A67, 545, 0}, {0x1A68, 545, 0}, {0x1A69, 545, 0},
    {0x1A6A, 545, 0}, {0x1A6B, 545, 0}, {0x1A6C, 545, 0}, {0x1A73, 545, 0},
    {0x1A74, 545, 0}, {0x1A75, 545, 0}, {0x1A76, 545, 0}, {0x1A77, 545, 0},
    {0x1A78, 545, 0}, {0x1A79, 545, 0}, {0x1A7A, 545, 0}, {0x1A7B, 545, 0},
    {0x1A7C, 545, 0}, {0x1A7F, 545, 0}, {0x1AB0, 545, 0}, {0x1AB1, 545, 0},
    {0x1AB2, 545, 0}, {0x1AB3, 545, 0}, {0x1AB4, 545, 0}, {0x1AB5, 545, 0},
    {0x1AB6, 545, 0}, {0x1AB7, 545, 0}, {0x1AB8, 545, 0}, {0x1AB9, 545, 0},
    {0x1ABA, 545, 0}, {0x1ABB, 545, 0}, {0x1ABC, 545, 0}, {0x1ABD, 545, 0},
    {0x1ABF, 545, 0}, {0x1AC0, 545, 0}, {0x1B00, 545, 0}, {0x1B01, 545, 0},
    {0x1B02, 545, 0}, {0x1B03, 545, 0}, {0x1B34, 545, 0}, {0x1B36, 545, 0},
    {0x1B37, 545, 0}, {0x1B38, 545, 0}, {0x1B39, 545, 0}, {0x1B3A, 545, 0},
    {0x1B3B, 545, 3}, {0x1B3C, 548, 0}, {0x1B3D, 548, 3}, {0x1B42, 551, 0},
    {0x1B43, 551, 3}, {0x1B6B, 554, 0}, {0x1B6C, 554, 0}, {0x1B6D, 554, 0},
    {0x1B6E, 554, 0}, {0x1B6F, 554, 0}, {0x1B70, 554, 0}, {0x1B71, 554, 0},
    {0x1B72, 554, 0}, {0x1B73, 554, 0}, {0x1B80, 554, 0}, {0x1B81, 554, 0},
    {0x1BA2, 554, 0}, {0x1BA3, 554, 0}, {0x1BA4, 554, 0}, {0x1BA5, 554, 0},
    {0x1BA8, 554, 0}, {0x1BA9, 554, 0}, {0x1BAB, 554, 0}, {0x1BAC, 554, 0},
    {0x1BAD, 554, 0}, {0x1BE6, 554, 0}, {0x1BE8, 554, 0}, {0x1BE9, 554, 0},
    {0x1BED, 554, 0}, {0x1BEF, 554, 0}, {0x1BF0, 554, 0}, {0x1BF1, 554, 0},
    {0x1C2C, 554, 0}, {0x1C2D, 554, 0}, {0x1C2E, 554, 0}, {0x1C2F, 554, 0},
    {0x1C30, 554, 0}, {0x1C31, 554, 0}, {0x1C32, 554, 0}, {0x1C33, 554, 0},
    {0x1C36, 554, 0}, {0x1C37, 554, 0}, {0x1CD0, 554, 0}, {0x1CD1, 554, 0},
    {0x1CD2, 554, 0}, {0x1CD4, 554, 0}, {0x1CD5, 554, 0}, {0x1CD6, 554, 0},
    {0x1CD7, 554, 0}, {0x1CD8, 554, 0}, {0x1CD9, 554, 0}, {0x1CDA, 554, 0},
    {0x1CDB, 554, 0}, {0x1CDC, 554, 0}, {0x1CDD, 554, 0}, {0x1CDE, 554, 0},
    {0x1CDF, 554, 0}, {0x1CE0, 554, 0}, {0x1CE2, 554, 0}, {0x1CE3, 554, 0},
    {0x1CE4, 554, 0}, {0x1CE5, 554, 0}, {0x1CE6, 554, 0}, {0x1CE7, 554, 0},
    {0x1CE8, 554, 0}, {0x1CED, 554, 0}, {0x1CF4, 554, 0}, {0x1CF8, 554, 0},
    {0x1CF9, 554, 0}, {0x1DC0, 554, 0}, {0x1DC1, 554, 0}, {0x1DC2, 554, 0},
    {0x1DC3, 554, 0}, {0x1DC4, 554, 0}, {0x1DC5, 554, 0}, {0x1DC6, 554, 0},
    {0x1DC7, 554, 0}, {0x1DC8, 554, 0}, {0x1DC9, 554, 0}, {0x1DCA, 554, 0},
    {0x1DCB, 554, 0}, {0x1DCC, 554, 0}, {0x1DCD, 554, 0}, {0x1DCE, 554, 0},
    {0x1DCF, 554, 0}, {0x1DD0, 554, 0}, {0x1DD1, 554, 0}, {0x1DD2, 554, 0},
    {0x1DD3, 554, 0}, {0x1DD4, 554, 0}, {0x1DD5, 554, 0}, {0x1DD6, 554, 0},
    {0x1DD7, 554, 0}, {0x1DD8, 554, 0}, {0x1DD9, 554, 0}, {0x1DDA, 554, 0},
    {0x1DDB, 554, 0}, {0x1DDC, 554, 0}, {0x1DDD, 554, 0}, {0x1DDE, 554, 0},
    {0x1DDF, 554, 0}, {0x1DE0, 554, 0}, {0x1DE1, 554, 0}, {0x1DE2, 554, 0},
    {0x1DE3, 554, 0}, {0x1DE4, 554, 0}, {0x1DE5, 554, 0}, {0x1DE6, 554, 0},
    {0x1DE7, 554, 0}, {0x1DE8, 554, 0}, {0x1DE9, 554, 0}, {0x1DEA, 554, 0},
    {0x1DEB, 554, 0}, {0x1DEC, 554, 0}, {0x1DED, 554, 0}, {0x1DEE, 554, 0},
    {0x1DEF, 554, 0}, {0x1DF0, 554, 0}, {0x1DF1, 554, 0}, {0x1DF2, 554, 0},
    {0x1DF3, 554, 0}, {0x1DF4, 554, 0}, {0x1DF5, 554, 0}, {0x1DF6, 554, 0},
    {0x1DF7, 554, 0}, {0x1DF8, 554, 0}, {0x1DF9, 554, 0}, {0x1DFB, 554, 0},
    {0x1DFC, 554, 0}, {0x1DFD, 554, 0}, {0x1DFE, 554, 0}, {0x1DFF, 554, 0},
    {0x1E00, 554, 1}, {0x1E01, 555, 1}, {0x1E02, 556, 1}, {0x1E03, 557, 1},
    {0x1E04, 558, 1}, {0x1E05, 559, 1}, {0x1E06, 560, 1}, {0x1E07, 561, 1},
    {0x1E08, 562, 1}, {0x1E09, 563, 1}, {0x1E0A, 564, 1}, {0x1E0B, 565, 1},
    {0x1E0C, 566, 1}, {0x1E0D, 567, 1}, {0x1E0E, 568, 1}, {0x1E0F, 569, 1},
    {0x1E10, 570, 1}, {0x1E11, 571, 1}, {0x1E12, 572, 1}, {0x1E13, 573, 1},
    {0x1E14, 574, 1}, {0x1E15, 575, 1}, {0x1E16, 576, 1}, {0x1E17, 577, 1},
    {0x1E18, 578, 1}, {0x1E19, 579, 1}, {0x1E1A, 580, 1}, {0x1E1B, 581, 1},
    {0x1E1C, 582, 1}, {0x1E1D, 583, 1}, {0x1E1E, 584, 1}, {0x1E1F, 585, 1},
    {0x1E20, 586, 1}, {0x1E21, 587, 1}, {0x1E22, 588, 1}, {0x1E23, 589, 1},
    {0x1E24, 590, 1}, {0x1E25, 591, 1}, {0x1E26, 592, 1}, {0x1E27, 593, 1},
    {0x1E28, 594, 1}, {0x1E29, 595, 1}, {0x1E2A, 596, 1}, {0x1E2B, 597, 1},
    {0x1E2C, 598, 1}, {0x1E2D, 599, 1}, {0x1E2E, 600, 1}, {0x1E2F, 601, 1},
    {0x1E30, 602, 1}, {0x1E31, 603, 1}, {0x1E32, 604, 1}, {0x1E33, 605, 1},
    {0x1E34, 606, 1}, {0x1E35, 607, 1}, {0x1E36, 608, 1}, {0x1E37, 609, 1},
    {0x1E38, 610, 1}, {0x1E39, 611, 1}, {0x1E3A, 612, 1}, {0x1E3B, 613, 1},
    {0x1E3C, 614, 1}, {0x1E3D, 615, 1}, {0x1E3E, 616, 1}, {0x1E3F, 617, 1},
    {0x1E40, 618, 1}, {0x1E41, 619, 1}, {0x1E42, 620, 1}, {0x1E43, 621, 1},
    {0x1E44, 622, 1}, {0x1E45, 623, 1}, {0x1E46, 624, 1}, {0x1E47, 625, 1},
    {0x1E48, 626, 1}, {0x1E49, 627, 1}, {0x1E4A, 628, 1}, {0x1E4B, 629, 1},
    {0x1E4C, 630, 1}, {0x1E4D, 631, 1}, {0x1E4E, 632, 1}, {0x1E4F, 633, 1},
    {0x1E50, 634, 1}, {0x1E51, 635, 1}, {0x1E52, 636, 1}, {0x1E53, 637, 1},
    {0x1E54, 638, 1}, {0x1E55, 639, 1}, {0x1E56, 640, 1}, {0x1E57, 641, 1},
    {0x1E58, 642, 1}, {0x1E59, 643, 1}, {0x1E5A, 644, 1}, {0x1E5B, 645, 1},
    {0x1E5C, 646, 1}, {0x1E5D, 647, 1}, {0x1E5E, 648, 1}, {0x1E5F, 649, 1},
    {0x1E60, 650, 1}, {0x1E61, 651, 1}, {0x1E62, 652, 1}, {0x1E63, 653, 1},
    {0x1E64, 654, 1}, {0x1E65, 655, 1}, {0x1E66, 656, 1}, {0x1E67, 657, 1},
    {0x1E68, 658, 1}, {0x1E69, 659, 1}, {0x1E6A, 660, 1}, {0x1E6B, 661, 1},
    {0x1E6C, 662, 1}, {0x1E6D, 663, 1}, {0x1E6E, 664, 1}, {0x1E6F, 665, 1},
    {0x1E70, 666, 1}, {0x1E71, 667, 1}, {0x1E72, 668, 1}, {0x1E73, 669, 1},
    {0x1E74, 670, 1}, {0x1E75, 671, 1}, {0x1E76, 672, 1}, {0x1E77, 673, 1},
    {0x1E78, 674, 1}, {0x1E79, 675, 1}, {0x1E7A, 676, 1}, {0x1E7B, 677, 1},
    {0x1E7C, 678, 1}, {0x1E7D, 679, 1}, {0x1E7E, 680, 1}, {0x1E7F, 681, 1},
    {0x1E80, 682, 1}, {0x1E81, 683, 1}, {0x1E82, 684, 1}, {0x1E83, 685, 1},
    {0x1E84, 686, 1}, {0x1E85, 687, 1}, {0x1E86, 688, 1}, {0x1E87, 689, 1},
    {0x1E88, 690, 1}, {0x1E89, 691, 1}, {0x1E8A, 692, 1}, {0x1E8B, 693, 1},
    {0x1E8C, 694, 1}, {0x1E8D, 695, 1}, {0x1E8E, 696, 1}, {0x1E8F, 697, 1},
    {0x1E90, 698, 1}, {0x1E91, 699, 1}, {0x1E92, 700, 1}, {0x1E93, 701, 1},
    {0x1E94, 702, 1}, {0x1E95, 703, 1}, {0x1E96, 704, 1}, {0x1E97, 705, 1},
    {0x1E98, 706, 1}, {0x1E99, 707, 1}, {0x1E9B, 708, 2}, {0x1EA0, 710, 1},
    {0x1EA1, 711, 1}, {0x1EA2, 712, 1}, {0x1EA3, 713, 1}, {0x1EA4, 714, 1},
    {0x1EA5, 715, 1}, {0x1EA6, 716, 1}, {0x1EA7, 717, 1}, {0x1EA8, 718, 1},
    {0x1EA9, 719, 1}, {0x1EAA, 720, 1}, {0x1EAB, 721, 1}, {0x1EAC, 722, 1},
    {0x1EAD, 723, 1}, {0x1EAE, 724, 1}, {0x1EAF, 725, 1}, {0x1EB0, 726, 1},
    {0x1EB1, 727, 1}, {0x1EB2, 728, 1}, {0x1EB3, 729, 1}, {0x1EB4, 730, 1},
    {0x1EB5, 731, 1}, {0x1EB6, 732, 1}, {0x1EB7, 733, 1}, {0x1EB8, 734, 1},
    {0x1EB9, 735, 1}, {0x1EBA, 736, 1}, {0x1EBB, 737, 1}, {0x1EBC, 738, 1},
    {0x1EBD, 739, 1}, {0x1EBE, 740, 1}, {0x1EBF, 741, 1}, {0x1EC0, 742, 1},
    {0x1EC1, 743, 1}, {0x1EC2, 744, 1}, {0x1EC3, 745, 1}, {0x1EC4, 746, 1},
    {0x1EC5, 747, 1}, {0x1EC6, 748, 1}, {0x1EC7, 749, 1}, {0x1EC8, 750, 1},
    {0x1EC9, 751, 1}, {0x1ECA, 752, 1}, {0x1ECB, 753, 1}, {0x1ECC, 754, 1},
    {0x1ECD, 755, 1}, {0x1ECE, 756, 1}, {0x1ECF, 757, 1}, {0x1ED0, 758, 1},
    {0x1ED1, 759, 1}, {0x1ED2, 760, 1}, {0x1ED3, 761, 1}, {0x1ED4, 762, 1},
    {0x1ED5, 763, 1}, {0x1ED6, 764, 1}, {0x1ED7, 765, 1}, {0x1ED8, 766, 1},
    {0x1ED9, 767, 1}, {0x1EDA, 768, 1}, {0x1EDB, 769, 1}, {0x1EDC, 770, 1},
    {0x1EDD, 771, 1}, {0x1EDE, 772, 1}, {0x1EDF, 773, 1}, {0x1EE0, 774, 1},
    {0x1EE1, 775, 1}, {0x1EE2, 776, 1}, {0x1EE3, 777, 1}, {0x1EE4, 778, 1},
    {0x1EE5, 779, 1}, {0x1EE6, 780, 1}, {0x1EE7, 781, 1}, {0x1EE8, 782, 1},
    {0x1EE9, 783, 1}, {0x1EEA, 784, 1}, {0x1EEB, 785, 1}, {0x1EEC, 786, 1},
    {0x1EED, 787, 1}, {0x1EEE, 788, 1}, {0x1EEF, 789, 1}, {0x1EF0, 790, 1},
    {0x1EF1, 791, 1}, {0x1EF2, 792, 1}, {0x1EF3, 793, 1}, {0x1EF4, 794, 1},
    {0x1EF5, 795, 1}, {0x1EF6, 796, 1}, {0x1EF7, 797, 1}, {0x1EF8, 798, 1},
    {0x1EF9, 799, 1}, {0x1F00, 800, 2}, {0x1F01, 802, 2}, {0x1F02, 804, 2},
    {0x1F03, 806, 2}, {0x1F04, 808, 2}, {0x1F05, 810, 2}, {0x1F06, 812, 2},
    {0x1F07, 814, 2}, {0x1F08, 816, 2}, {0x1F09, 818, 2}, {0x1F0A, 820, 2},
    {0x1F0B, 822, 2}, {0x1F0C, 824, 2}, {0x1F0D, 826, 2}, {0x1F0E, 828, 2},
    {0x1F0F, 830, 2}, {0x1F10, 832, 2}, {0x1F11, 834, 2}, {0x1F12, 836, 2},
    {0x1F13, 838, 2}, {0x1F14, 840, 2}, {0x1F15, 842, 2}, {0x1F18, 844, 2},
    {0x1F19, 846, 2}, {0x1F1A, 848, 2}, {0x1F1B, 850, 2}, {0x1F1C, 852, 2},
    {0x1F1D, 854, 2}, {0x1F20, 856, 2}, {0x1F21, 858, 2}, {0x1F22, 860, 2},
    {0x1F23, 862, 2}, {0x1F24, 864, 2}, {0x1F25, 866, 2}, {0x1F26, 868, 2},
    {0x1F27, 870, 2}, {0x1F28, 872, 2}, {0x1F29, 874, 2}, {0x1F2A, 876, 2},
    {0x1F2B, 878, 2}, {0x1F2C, 880, 2}, {0x1F2D, 882, 2}, {0x1F2E, 884, 2},
    {0x1F2F, 886, 2}, {0x1F30, 888, 2}, {0x1F31, 890, 2}, {0x1F32, 892, 2},
    {0x1F33, 894, 2}, {0x1F34, 896, 2}, {0x1F35, 898, 2}, {0x1F36, 900, 2},
    {0x1F37, 902, 2}, {0x1F38, 904, 2}, {0x1F39, 906, 2}, {0x1F3A, 908, 2},
    {0x1F3B, 910, 2}, {0x1F3C, 912, 2}, {0x1F3D, 914, 2}, {0x1F3E, 916, 2},
    {0x1F3F, 918, 2}, {0x1F40, 920, 2}, {0x1F41, 922, 2}, {0x1F42, 924, 2},
    {0x1F43, 926, 2}, {0x1F44, 928, 2}, {0x1F45, 930, 2}, {0x1F48, 932, 2},
    {0x1F49, 934, 2}, {0x1F4A, 936, 2}, {0x1F4B, 938, 2}, {0x1F4C, 940, 2},
    {0x1F4D, 942, 2}, {0x1F50, 944, 2}, {0x1F51, 946, 2}, {0x1F52, 948, 2},
    {0x1F53, 950, 2}, {0x1F54, 952, 2}, {0x1F55, 954, 2}, {0x1F56, 956, 2},
    {0x1F57, 958, 2}, {0x1F59, 960, 2}, {0x1F5B, 962, 2}, {0x1F5D, 964, 2},
    {0x1F5F, 966, 2}, {0x1F60, 968, 2}, {0x1F61, 970, 2}, {0x1F62, 972, 2},
    {0x1F63, 974, 2}, {0x1F64, 976, 2}, {0x1F65, 978, 2}, {0x1F66, 980, 2},
    {0x1F67, 982, 2}, {0x1F68, 984, 2}, {0x1F69, 986, 2}, {0x1F6A, 988, 2},
    {0x1F6B, 990, 2}, {0x1F6C, 992, 2}, {0x1F6D, 994, 2}, {0x1F6E, 996, 2},
    {0x1F6F, 998, 2}, {0x1F70, 1000, 2}, {0x1F71, 1002, 2}, {0x1F72, 1004, 2},
    {0x1F73, 1006, 2}, {0x1F74, 1008, 2}, {0x1F75, 1010, 2}, {0x1F76, 1012, 2},
    {0x1F77, 1014, 2}, {0x1F78, 1016, 2}, {0x1F79, 1018, 2}, {0x1F7A, 1020, 2},
    {0x1F7B, 1022, 2}, {0x1F7C, 1024, 2}, {0x1F7D, 1026, 2}, {0x1F80, 1028, 2},
    {0x1F81, 1030, 2}, {0x1F82, 1032, 2}, {0x1F83, 1034, 2}, {0x1F84, 1036, 2},
    {0x1F85, 1038, 2}, {0x1F86, 1040, 2}, {0x1F87, 1042, 2}, {0x1F88, 1044, 2},
    {0x1F89, 1046, 2}, {0x1F8A, 1048, 2}, {0x1F8B, 1050, 2}, {0x1F8C, 1052, 2},
    {0x1F8D, 1054, 2}, {0x1F8E, 1056, 2}, {0x1F8F, 1058, 2}, {0x1F90, 1060, 2},
    {0x1F91, 1062, 2}, {0x1F92, 1064, 2}, {0x1F93, 1066, 2}, {0x1F94, 1068, 2},
    {0x1F95, 1070, 2}, {0x1F96, 1072, 2}, {0x1F97, 1074, 2}, {0x1F98, 1076, 2},
    {0x1F99, 1078, 2}, {0x1F9A, 1080, 2}, {0x1F9B, 1082, 2}, {0x1F9C, 1084, 2},
    {0x1F9D, 1086, 2}, {0x1F9E, 1088, 2}, {0x1F9F, 1090, 2}, {0x1FA0, 1092, 2},
    {0x1FA1, 1094, 2}, {0x1FA2, 1096, 2}, {0x1FA3, 1098, 2}, {0x1FA4, 1100, 2},
    {0x1FA5, 1102, 2}, {0x1FA6, 1104, 2}, {0x1FA7, 1106, 2}, {0x1FA8, 1108, 2},
    {0x1FA9, 1110, 2}, {0x1FAA, 1112, 2}, {0x1FAB, 1114, 2}, {0x1FAC, 1116, 2},
    {0x1FAD, 1118, 2}, {0x1FAE, 1120, 2}, {0x1FAF, 1122, 2}, {0x1FB0, 1124, 2},
    {0x1FB1, 1126, 2}, {0x1FB2, 1128, 2}, {0x1FB3, 1130, 2}, {0x1FB4, 1132, 2},
    {0x1FB6, 1134, 2}, {0x1FB7, 1136, 2}, {0x1FB8, 1138, 2}, {0x1FB9, 1140, 2},
    {0x1FBA, 1142, 2}, {0x1FBB, 1144, 2}, {0x1FBC, 1146, 2}, {0x1FBE, 1148, 2},
    {0x1FC1, 1150, 2}, {0x1FC2, 1152, 2}, {0x1FC3, 1154, 2}, {0x1FC4, 1156, 2},
    {0x1FC6, 1158, 2}, {0x1FC7, 1160, 2}, {0x1FC8, 1162, 2}, {0x1FC9, 1164, 2},
    {0x1FCA, 1166, 2}, {0x1FCB, 1168, 2}, {0x1FCC, 1170, 2}, {0x1FCD, 1172, 3},
    {0x1FCE, 1175, 3}, {0x1FCF, 1178, 3}, {0x1FD0, 1181, 2}, {0x1FD1, 1183, 2},
    {0x1FD2, 1185, 2}, {0x1FD3, 1187, 2}, {0x1FD6, 1189, 2}, {0x1FD7, 1191, 2},
    {0x1FD8, 1193, 2}, {0x1FD9, 1195, 2}, {0x1FDA, 1197, 2}, {0x1FDB, 1199, 2},
    {0x1FDD, 1201, 3}, {0x1FDE, 1204, 3}, {0x1FDF, 1207, 3}, {0x1FE0, 1210, 2},
    {0x1FE1, 1212, 2}, {0x1FE2, 1214, 2}, {0x1FE3, 1216, 2}, {0x1FE4, 1218, 2},
    {0x1FE5, 1220, 2}, {0x1FE6, 1222, 2}, {0x1FE7, 1224, 2}, {0x1FE8, 1226, 2},
    {0x1FE9, 1228, 2}, {0x1FEA, 1230, 2}, {0x1FEB, 1232, 2}, {0x1FEC, 1234, 2},
    {0x1FED, 1236, 2}, {0x1FEE, 1238, 2}, {0x1FEF, 1240, 1}, {0x1FF2, 1241, 2},
    {0x1FF3, 1243, 2}, {0x1FF4, 1245, 2}, {0x1FF6, 1247, 2}, {0x1FF7, 1249, 2},
    {0x1FF8, 1251, 2}, {0x1FF9, 1253, 2}, {0x1FFA, 1255, 2}, {0x1FFB, 1257, 2},
    {0x1FFC, 1259, 2}, {0x1FFD, 1261, 2}, {0x2000, 1263, 3}, {0x2001, 1266, 3},
    {0x20D0, 1269, 0}, {0x20D1, 1269, 0}, {0x20D2, 1269, 0}, {0x20D3, 1269, 0},
    {0x20D4, 1269, 0}, {0x20D5, 1269, 0}, {0x20D6, 1269, 0}, {0x20D7, 1269, 0},
    {0x20D8, 1269, 0}, {0x20D9, 1269, 0}, {0x20DA, 1269, 0}, {0x20DB, 1269, 0},
    {0x20DC, 1269, 0}, {0x20E1, 1269, 0}, {0x20E5, 1269, 0}, {0x20E6, 1269, 0},
    {0x20E7, 1269, 0}, {0x20E8, 1269, 0}, {0x20E9, 1269, 0}, {0x20EA, 1269, 0},
    {0x20EB, 1269, 0}, {0x20EC, 1269, 0}, {0x20ED, 1269, 0}, {0x20EE, 1269, 0},
    {0x20EF, 1269, 0}, {0x20F0, 1269, 0}, {0x2126, 1269, 2}, {0x212A, 1271, 1},
    {0x212B, 1272, 1}, {0x219A, 1273, 3}, {0x219B, 1276, 3}, {0x21AE, 1279, 3},
    {0x21CD, 1282, 3}, {0x21CE, 1285, 3}, {0x21CF, 1288, 3}, {0x2204, 1291, 3},
    {0x2209, 1294, 3}, {0x220C, 1297, 3}, {0x2224, 1300, 3}, {0x2226, 1303, 3},
    {0x2241, 1306, 3}, {0x2244, 1309, 3}, {0x2247, 1312, 3}, {0x2249, 1315, 3},
    {0x2260, 1318, 1}, {0x2262, 1319, 3}, {0x226D, 1322, 3}, {0x226E, 1325, 1},
    {0x226F, 1326, 1}, {0x2270, 1327, 3}, {0x2271, 1330, 3}, {0x2274, 1333, 3},
    {0x2275, 1336, 3}, {0x2278, 1339, 3}, {0x2279, 1342, 3}, {0x2280, 1345, 3},
    {0x2281, 1348, 3}, {0x2284, 1351, 3}, {0x2285, 1354, 3}, {0x2288, 1357, 3},
    {0x2289, 1360, 3}, {0x22AC, 1363, 3}, {0x22AD, 1366, 3}, {0x22AE, 1369, 3},
    {0x22AF, 1372, 3}, {0x22E0, 1375, 3}, {0x22E1, 1378, 3}, {0x22E2, 1381, 3},
    {0x22E3, 1384, 3}, {0x22EA, 1387, 3}, {0x22EB, 1390, 3}, {0x22EC, 1393, 3},
    {0x22ED, 1396, 3}, {0x2329, 1399, 3}, {0x232A, 1402, 3}, {0x2ADC, 1405, 3},
    {0x2CEF, 1408, 0}, {0x2CF0, 1408, 0}, {0x2CF1, 1408, 0}, {0x2D7F, 1408, 0},
    {0x2DE0, 1408, 0}, {0x2DE1, 1408, 0}, {0x2DE2, 1408, 0}, {0x2DE3, 1408, 0},
    {0x2DE4, 1408, 0}, {0x2DE5, 1408, 0}, {0x2DE6, 1408, 0}, {0x2DE7, 1408, 0},
    {0x2DE8, 1408, 0}, {0x2DE9, 1408, 0}, {0x2DEA, 1408, 0}, {0x2DEB, 1408, 0},
    {0x2DEC, 1408, 0}, {0x2DED, 1408, 0}, {0x2DEE, 1408, 0}, {0x2DEF, 1408, 0},
    {0x2DF0, 1408, 0}, {0x2DF1, 1408, 0}, {0x2DF2, 1408, 0}, {0x2DF3, 1408, 0},
    {0x2DF4, 1408, 0}, {0x2DF5, 1408, 0}, {0x2DF6, 1408, 0}, {0x2DF7, 1408, 0},
    {0x2DF8, 1408, 0}, {0x2DF9, 1408, 0}, {0x2DFA, 1408, 0}, {0x2DFB, 1408, 0},
    {0x2DFC, 1408, 0}, {0x2DFD, 1408, 0}, {0x2DFE, 1408, 0}, {0x2DFF, 1408, 0},
    {0x302A, 1408, 0}, {0x302B, 1408, 0}, {0x302C, 1408, 0}, {0x302D, 1408, 0},
    {0x304C, 1408, 3}, {0x304E, 1411, 3}, {0x3050, 1414, 3}, {0x3052, 1417, 3},
    {0x3054, 1420, 3}, {0x3056, 1423, 3}, {0x3058, 1426, 3}, {0x305A, 1429, 3},
    {0x305C, 1432, 3}, {0x305E, 1435, 3}, {0x3060, 1438, 3}, {0x3062, 1441, 3},
    {0x3065, 1444, 3}, {0x3067, 1447, 3}, {0x3069, 1450, 3}, {0x3070, 1453, 3},
    {0x3071, 1456, 3}, {0x3073, 1459, 3}, {0x3074, 1462, 3}, {0x3076, 1465, 3},
    {0x3077, 1468, 3}, {0x3079, 1471, 3}, {0x307A, 1474, 3}, {0x307C, 1477, 3},
    {0x307D, 1480, 3}, {0x3094, 1483, 3}, {0x3099, 1486, 0}, {0x309A, 1486, 0},
    {0x309E, 1486, 3}, {0x30AC, 1489, 3}, {0x30AE, 1492, 3}, {0x30B0, 1495, 3},
    {0x30B2, 1498, 3}, {0x30B4, 1501, 3}, {0x30B6, 1504, 3}, {0x30B8, 1507, 3},
    {0x30BA, 1510, 3}, {0x30BC, 1513, 3}, {0x30BE, 1516, 3}, {0x30C0, 1519, 3},
    {0x30C2, 1522, 3}, {0x30C5, 1525, 3}, {0x30C7, 1528, 3}, {0x30C9, 1531, 3},
    {0x30D0, 1534, 3}, {0x30D1, 1537, 3}, {0x30D3, 1540, 3}, {0x30D4, 1543, 3},
    {0x30D6, 1546, 3}, {0x30D7, 1549, 3}, {0x30D9, 1552, 3}, {0x30DA, 1555, 3},
    {0x30DC, 1558, 3}, {0x30DD, 1561, 3}, {0x30F4, 1564, 3}, {0x30F7, 1567, 3},
    {0x30F8, 1570, 3}, {0x30F9, 1573, 3}, {0x30FA, 1576, 3}, {0x30FE, 1579, 3},
    {0xA66F, 1582, 0}, {0xA674, 1582, 0}, {0xA675, 1582, 0}, {0xA676, 1582, 0},
    {0xA677, 1582, 0}, {0xA678, 1582, 0}, {0xA679, 1582, 0}, {0xA67A, 1582, 0},
    {0xA67B, 1582, 0}, {0xA67C, 1582, 0}, {0xA67D, 1582, 0}, {0xA69E, 1582, 0},
    {0xA69F, 1582, 0}, {0xA6F0, 1582, 0}, {0xA6F1, 1582, 0}, {0xA802, 1582, 0},
    {0xA806, 1582, 0}, {0xA80B, 1582, 0}, {0xA825, 1582, 0}, {0xA826, 1582, 0},
    {0xA82C, 1582, 0}, {0xA8C4, 1582, 0}, {0xA8C5, 1582, 0}, {0xA8E0, 1582, 0},
    {0xA8E1, 1582, 0}, {0xA8E2, 1582, 0}, {0xA8E3, 1582, 0}, {0xA8E4, 1582, 0},
    {0xA8E5, 1582, 0}, {0xA8E6, 1582, 0}, {0xA8E7, 1582, 0}, {0xA8E8, 1582, 0},
    {0xA8E9, 1582, 0}, {0xA8EA, 1582, 0}, {0xA8EB, 1582, 0}, {0xA8EC, 1582, 0},
    {0xA8ED, 1582, 0}, {0xA8EE, 1582, 0}, {0xA8EF, 1582, 0}, {0xA8F0, 1582, 0},
    {0xA8F1, 1582, 0}, {0xA8FF, 1582, 0}, {0xA926, 1582, 0}, {0xA927, 1582, 0},
    {0xA928, 1582, 0}, {0xA929, 1582, 0}, {0xA92A, 1582, 0}, {0xA92B, 1582, 0},
    {0xA92C, 1582, 0}, {0xA92D, 1582, 0}, {0xA947, 1582, 0}, {0xA948, 1582, 0},
    {0xA949, 1582, 0}, {0xA94A, 1582, 0}, {0xA94B, 1582, 0}, {0xA94C, 1582, 0},
    {0xA94D, 1582, 0}, {0xA94E, 1582, 0}, {0xA94F, 1582, 0}, {0xA950, 1582, 0},
    {0xA951, 1582, 0}, {0xA980, 1582, 0}, {0xA981, 1582, 0}, {0xA982, 1582, 0},
    {0xA9B3, 1582, 0}, {0xA9B6, 1582, 0}, {0xA9B7, 1582, 0}, {0xA9B8, 1582, 0},
    {0xA9B9, 1582, 0}, {0xA9BC, 1582, 0}, {0xA9BD, 1582, 0}, {0xA9E5, 1582, 0},
    {0xAA29, 1582, 0}, {0xAA2A, 1582, 0}, {0xAA2B, 1582, 0}, {0xAA2C, 1582, 0},
    {0xAA2D, 1582, 0}, {0xAA2E, 1582, 0}, {0xAA31, 1582, 0}, {0xAA32, 1582, 0},
    {0xAA35, 1582, 0}, {0xAA36, 1582, 0}, {0xAA43, 1582, 0}, {0xAA4C, 1582, 0},
    {0xAA7C, 1582, 0}, {0xAAB0, 1582, 0}, {0xAAB2, 1582, 0}, {0xAAB3, 1582, 0},
    {0xAAB4, 1582, 0}, {0xAAB7, 1582, 0}, {0xAAB8, 1582, 0}, {0xAABE, 1582, 0},
    {0xAABF, 1582, 0}, {0xAAC1, 1582, 0}, {0xAAEC, 1582, 0}, {0xAAED, 1582, 0},
    {0xAAF6, 1582, 0}, {0xABE5, 1582, 0}, {0xABE8, 1582, 0}, {0xABED, 1582, 0},
    {0xF900, 1582, 3}, {0xF901, 1585, 3}, {0xF902, 1588, 3}, {0xF903, 1591, 3},
    {0xF904, 1594, 3}, {0xF905, 1597, 3}, {0xF906, 1600, 3}, {0xF907, 1603, 3},
    {0xF908, 1606, 3}, {0xF909, 1609, 3}, {0xF90A, 1612, 3}, {0xF90B, 1615, 3},
    {0xF90C, 1618, 3}, {0xF90D, 1621, 3}, {0xF90E, 1624, 3}, {0xF90F, 1627, 3},
    {0xF910, 1630, 3}, {0xF911, 1633, 3}, {0xF912, 1636, 3}, {0xF913, 1639, 3},
    {0xF914, 1642, 3}, {0xF915, 1645, 3}, {0xF916, 1648, 3}, {0xF917, 1651, 3},
    {0xF918, 1654, 3}, {0xF919, 1657, 3}, {0xF91A, 1660, 3}, {0xF91B, 1663, 3},
    {0xF91C, 1666, 3}, {0xF91D, 1669, 3}, {0xF91E, 1672, 3}, {0xF91F, 1675, 3},
    {0xF920, 1678, 3}, {0xF921, 1681, 3}, {0xF922, 1684, 3}, {0xF923, 1687, 3},
    {0xF924, 1690, 3}, {0xF925, 1693, 3}, {0xF926, 1696, 3}, {0xF927, 1699, 3},
    {0xF928, 1702, 3}, {0xF929, 1705, 3}, {0xF92A, 1708, 3}, {0xF92B, 1711, 3},
    {0xF92C, 1714, 3}, {0xF92D, 1717, 3}, {0xF92E, 1720, 3}, {0xF92F, 1723, 3},
    {0xF930, 1726, 3}, {0xF931, 1729, 3}, {0xF932, 1732, 3}, {0xF933, 1735, 3},
    {0xF934, 1738, 3}, {0xF935, 1741, 3}, {0xF936, 1744, 3}, {0xF937, 1747, 3},
    {0xF938, 1750, 3}, {0xF939, 1753, 3}, {0xF93A, 1756, 3}, {0xF93B, 1759, 3},
    {0xF93C, 1762, 3}, {0xF93D, 1765, 3}, {0xF93E, 1768, 3}, {0xF93F, 1771, 3},
    {0xF940, 1774, 3}, {0xF941, 1777, 3}, {0xF942, 1780, 3}, {0xF943, 1783, 3},
    {0xF944, 1786, 3}, {0xF945, 1789, 3}, {0xF946, 1792, 3}, {0xF947, 1795, 3},
    {0xF948, 1798, 3}, {0xF949, 1801, 3}, {0xF94A, 1804, 3}, {0xF94B, 1807, 3},
    {0xF94C, 1810, 3}, {0xF94D, 1813, 3}, {0xF94E, 1816, 3}, {0xF94F, 1819, 3},
    {0xF950, 1822, 3}, {0xF951, 1825, 3}, {0xF952, 1828, 3}, {0xF953, 1831, 3},
    {0xF954, 1834, 3}, {0xF955, 1837, 3}, {0xF956, 1840, 3}, {0xF957, 1843, 3},
    {0xF958, 1846, 3}, {0xF959, 1849, 3}, {0xF95A, 1852, 3}, {0xF95B, 1855, 3},
    {0xF95C, 1858, 3}, {0xF95D, 1861, 3}, {0xF95E, 1864, 3}, {0xF95F, 1867, 3},
    {0xF960, 1870, 3}, {0xF961, 1873, 3}, {0xF962, 1876, 3}, {0xF963, 1879, 3},
    {0xF964, 1882, 3}, {0xF965, 1885, 3}, {0xF966, 1888, 3}, {0xF967, 1891, 3},
    {0xF968, 1894, 3}, {0xF969, 1897, 3}, {0xF96A, 1900, 3}, {0xF96B, 1903, 3},
    {0xF96C, 1906, 3}, {0xF96D, 1909, 3}, {0xF96E, 1912, 3}, {0xF96F, 1915, 3},
    {0xF970, 1918, 3}, {0xF971, 1921, 3}, {0xF972, 1924, 3}, {0xF973, 1927, 3},
    {0xF974, 1930, 3}, {0xF975, 1933, 3}, {0xF976, 1936, 3}, {0xF977, 1939, 3},
    {0xF978, 1942, 3}, {0xF979, 1945, 3}, {0xF97A, 1948, 3}, {0xF97B, 1951, 3},
    {0xF97C, 1954, 3}, {0xF97D, 1957, 3}, {0xF97E, 1960, 3}, {0xF97F, 1963, 3},
    {0xF980, 1966, 3}, {0xF981, 1969, 3}, {0xF982, 1972, 3}, {0xF983, 1975, 3},
    {0xF984, 1978, 3}, {0xF985, 1981, 3}, {0xF986, 1984, 3}, {0xF987, 1987, 3},
    {0xF988, 1990, 3}, {0xF989, 1993, 3}, {0xF98A, 1996, 3}, {0xF98B, 1999, 3},
    {0xF98C, 2002, 3}, {0xF98D, 2005, 3}, {0xF98E, 2008, 3}, {0xF98F, 2011, 3},
    {0xF990, 2014, 3}, {0xF991, 2017, 3}, {0xF992, 2020, 3}, {0xF993, 2023, 3},
    {0xF994, 2026, 3}, {0xF995, 2029, 3}, {0xF996, 2032, 3}, {0xF997, 2035, 3},
    {0xF998, 2038, 3}, {0xF999, 2041, 3}, {0xF99A, 2044, 3}, {0xF99B, 2047, 3},
    {0xF99C, 2050, 3}, {0xF99D, 2053, 3}, {0xF99E, 2056, 3}, {0xF99F, 2059, 3},
    {0xF9A0, 2062, 3}, {0xF9A1, 2065, 3}, {0xF9A2, 2068, 3}, {0xF9A3, 2071, 3},
    {0xF9A4, 2074, 3}, {0xF9A5, 2077, 3}, {0xF9A6, 2080, 3}, {0xF9A7, 2083, 3},
    {0xF9A8, 2086, 3}, {0xF9A9, 2089, 3}, {0xF9AA, 2092, 3}, {0xF9AB, 2095, 3},
    {0xF9AC, 2098, 3}, {0xF9AD, 2101, 3}, {0xF9AE, 2104, 3}, {0xF9AF, 2107, 3},
    {0xF9B0, 2110, 3}, {0xF9B1, 2113, 3}, {0xF9B2, 2116, 3}, {0xF9B3, 2119, 3},
    {0xF9B4, 2122, 3}, {0xF9B5, 2125, 3}, {0xF9B6, 2128, 3}, {0xF9B7, 2131, 3},
    {0xF9B8, 2134, 3}, {0xF9B9, 2137, 3}, {0xF9BA, 2140, 3}, {0xF9BB, 2143, 3},
    {0xF9BC, 2146, 3}, {0xF9BD, 2149, 3}, {0xF9BE, 2152, 3}, {0xF9BF, 2155, 3},
    {0xF9C0, 2158, 3}, {0xF9C1, 2161, 3}, {0xF9C2, 2164, 3}, {0xF9C3, 2167, 3},
    {0xF9C4, 2170, 3}, {0xF9C5, 2173, 3}, {0xF9C6, 2176, 3}, {0xF9C7, 2179, 3},
    {0xF9C8, 2182, 3}, {0xF9C9, 2185, 3}, {0xF9CA, 2188, 3}, {0xF9CB, 2191, 3},
    {0xF9CC, 2194, 3}, {0xF9CD, 2197, 3}, {0xF9CE, 2200, 3}, {0xF9CF, 2203, 3},
    {0xF9D0, 2206, 3}, {0xF9D1, 2209, 3}, {0xF9D2, 2212, 3}, {0xF9D3, 2215, 3},
    {0xF9D4, 2218, 3}, {0xF9D5, 2221, 3}, {0xF9D6, 2224, 3}, {0xF9D7, 2227, 3},
    {0xF9D8, 2230, 3}, {0xF9D9, 2233, 3}, {0xF9DA, 2236, 3}, {0xF9DB, 2239, 3},
    {0xF9DC, 2242, 3}, {0xF9DD, 2245, 3}, {0xF9DE, 2248, 3}, {0xF9DF, 2251, 3},
    {0xF9E0, 2254, 3}, {0xF9E1, 2257, 3}, {0xF9E2, 2260, 3}, {0xF9E3, 2263, 3},
    {0xF9E4, 2266, 3}, {0xF9E5, 2269, 3}, {0xF9E6, 2272, 3}, {0xF9E7, 2275, 3},
    {0xF9E8, 2278, 3}, {0xF9E9, 2281, 3}, {0xF9EA, 2284, 3}, {0xF9EB, 2287, 3},
    {0xF9EC, 2290, 3}, {0xF9ED, 2293, 3}, {0xF9EE, 2296, 3}, {0xF9EF, 2299, 3},
    {0xF9F0, 2302, 3}, {0xF9F1, 2305, 3}, {0xF9F2, 2308, 3}, {0xF9F3, 2311, 3},
    {0xF9F4, 2314, 3}, {0xF9F5, 2317, 3}, {0xF9F6, 2320, 3}, {0xF9F7, 2323, 3},
    {0xF9F8, 2326, 3}, {0xF9F9, 2329, 3}, {0xF9FA, 2332, 3}, {0xF9FB, 2335, 3},
    {0xF9FC, 2338, 3}, {0xF9FD, 2341, 3}, {0xF9FE, 2344, 3}, {0xF9FF, 2347, 3},
    {0xFA00, 2350, 3}, {0xFA01, 2353, 3}, {0xFA02, 2356, 3}, {0xFA03, 2359, 3},
    {0xFA04, 2362, 3}, {0xFA05, 2365, 3}, {0xFA06, 2368, 3}, {0xFA07, 2371, 3},
    {0xFA08, 2374, 3}, {0xFA09, 2377, 3}, {0xFA0A, 2380, 3}, {0xFA0B, 2383, 3},
    {0xFA0C, 2386, 3}, {0xFA0D, 2389, 3}, {0xFA10, 2392, 3}, {0xFA12, 2395, 3},
    {0xFA15, 2398, 3}, {0xFA16, 2401, 3}, {0xFA17, 2404, 3}, {0xFA18, 2407, 3},
    {0xFA19, 2410, 3}, {0xFA1A, 2413, 3}, {0xFA1B, 2416, 3}, {0xFA1C, 2419, 3},
    {0xFA1D, 2422, 3}, {0xFA1E, 2425, 3}, {0xFA20, 2428, 3}, {0xFA22, 2431, 3},
    {0xFA25, 2434, 3}, {0xFA26, 2437, 3}, {0xFA2A, 2440, 3}, {0xFA2B, 2443, 3},
    {0xFA2C, 2446, 3}, {0xFA2D, 2449, 3}, {0xFA2E, 2452, 3}, {0xFA2F, 2455, 3},
    {0xFA30, 2458, 3}, {0xFA31, 2461, 3}, {0xFA32, 2464, 3}, {0xFA33, 2467, 3},
    {0xFA34, 2470, 3}, {0xFA35, 2473, 3}, {0xFA36, 2476, 3}, {0xFA37, 2479, 3},
    {0xFA38, 2482, 3}, {0xFA39, 2485, 3}, {0xFA3A, 2488, 3}, {0xFA3B, 2491, 3},
    {0xFA3C, 2494, 3}, {0xFA3D, 2497, 3}, {0xFA3E, 2500, 3}, {0xFA3F, 2503, 3},
    {0xFA40, 2506, 3}, {0xFA41, 2509, 3}, {0xFA42, 2512, 3}, {0xFA43, 2515, 3},
    {0xFA44, 2518, 3}, {0xFA45, 2521, 3}, {0xFA46, 2524, 3}, {0xFA47, 2527, 3},
    {0xFA48, 2530, 3}, {0xFA49, 2533, 3}, {0xFA4A, 2536, 3}, {0xFA4B, 2539, 3},
    {0xFA4C, 2542, 3}, {0xFA4D, 2545, 3}, {0xFA4E, 2548, 3}, {0xFA4F, 2551, 3},
    {0xFA50, 2554, 3}, {0xFA51, 2557, 3}, {0xFA52, 2560, 3}, {0xFA53, 2563, 3},
    {0xFA54, 2566, 3}, {0xFA55, 2569, 3}, {0xFA56, 2572, 3}, {0xFA57, 2575, 3},
    {0xFA58, 2578, 3}, {0xFA59, 2581, 3}, {0xFA5A, 2584, 3}, {0xFA5B, 2587, 3},
    {0xFA5C, 2590, 3}, {0xFA5D, 2593, 3}, {0xFA5E, 2596, 3}, {0xFA5F, 2599, 3},
    {0xFA60, 2602, 3}, {0xFA61, 2605, 3}, {0xFA62, 2608, 3}, {0xFA63, 2611, 3},
    {0xFA64, 2614, 3}, {0xFA65, 2617, 3}, {0xFA66, 2620, 3}, {0xFA67, 2623, 3},
    {0xFA68, 2626, 3}, {0xFA69, 2629, 3}, {0xFA6A, 2632, 3}, {0xFA6B, 2635, 3},
    {0xFA6C, 2638, 4}, {0xFA6D, 2642, 3}, {0xFA70, 2645, 3}, {0xFA71, 2648, 3},
    {0xFA72, 2651, 3}, {0xFA73, 2654, 3}, {0xFA74, 2657, 3}, {0xFA75, 2660, 3},
    {0xFA76, 2663, 3}, {0xFA77, 2666, 3}, {0xFA78, 2669, 3}, {0xFA79, 2672, 3},
    {0xFA7A, 2675, 3}, {0xFA7B, 2678, 3}, {0xFA7C, 2681, 3}, {0xFA7D, 2684, 3},
    {0xFA7E, 2687, 3}, {0xFA7F, 2690, 3}, {0xFA80, 2693, 3}, {0xFA81, 2696, 3},
    {0xFA82, 2699, 3}, {0xFA83, 2702, 3}, {0xFA84, 2705, 3}, {0xFA85, 2708, 3},
    {0xFA86, 2711, 3}, {0xFA87, 2714, 3}, {0xFA88, 2717, 3}, {0xFA89, 2720, 3},
    {0xFA8A, 2723, 3}, {0xFA8B, 2726, 3}, {0xFA8C, 2729, 3}, {0xFA8D, 2732, 3},
    {0xFA8E, 2735, 3}, {0xFA8F, 2738, 3}, {0xFA90, 2741, 3}, {0xFA91, 2744, 3},
    {0xFA92, 2747, 3}, {0xFA93, 2750, 3}, {0xFA94, 2753, 3}, {0xFA95, 2756, 3},
    {0xFA96, 2759, 3}, {0xFA97, 2762, 3}, {0xFA98, 2765, 3}, {0xFA99, 2768, 3},
    {0xFA9A, 2771, 3}, {0xFA9B, 2774, 3}, {0xFA9C, 2777, 3}, {0xFA9D, 2780, 3},
    {0xFA9E, 2783, 3}, {0xFA9F, 2786, 3}, {0xFAA0, 2789, 3}, {0xFAA1, 2792, 3},
    {0xFAA2, 2795, 3}, {0xFAA3, 2798, 3}, {0xFAA4, 2801, 3}, {0xFAA5, 2804, 3},
    {0xFAA6, 2807, 3}, {0xFAA7, 2810, 3}, {0xFAA8, 2813, 3}, {0xFAA9, 2816, 3},
    {0xFAAA, 2819, 3}, {0xFAAB, 2822, 3}, {0xFAAC, 2825, 3}, {0xFAAD, 2828, 3},
    {0xFAAE, 2831, 3}, {0xFAAF, 2834, 3}, {0xFAB0, 2837, 3}, {0xFAB1, 2840, 3},
    {0xFAB2, 2843, 3}, {0xFAB3, 2846, 3}, {0xFAB4, 2849, 3}, {0xFAB5, 2852, 3},
    {0xFAB6, 2855, 3}, {0xFAB7, 2858, 3}, {0xFAB8, 2861, 3}, {0xFAB9, 2864, 3},
    {0xFABA, 2867, 3}, {0xFABB, 2870, 3}, {0xFABC, 2873, 3}, {0xFABD, 2876, 3},
    {0xFABE, 2879, 3}, {0xFABF, 2882, 3}, {0xFAC0, 2885, 3}, {0xFAC1, 2888, 3},
    {0xFAC2, 2891, 3}, {0xFAC3, 2894, 3}, {0xFAC4, 2897, 3}, {0xFAC5, 2900, 3},
    {0xFAC6, 2903, 3}, {0xFAC7, 2906, 3}, {0xFAC8, 2909, 3}, {0xFAC9, 2912, 3},
    {0xFACA, 2915, 3}, {0xFACB, 2918, 3}, {0xFACC, 2921, 3}, {0xFACD, 2924, 3},
    {0xFACE, 2927, 3}, {0xFACF, 2930, 4}, {0xFAD0, 2934, 4}, {0xFAD1, 2938, 4},
    {0xFAD2, 2942, 3}, {0xFAD3, 2945, 3}, {0xFAD4, 2948, 3}, {0xFAD5, 2951, 4},
    {0xFAD6, 2955, 4}, {0xFAD7, 2959, 4}, {0xFAD8, 2963, 3}, {0xFAD9, 2966, 3},
    {0xFB1D, 2969, 2}, {0xFB1E, 2971, 0}, {0xFB1F, 2971, 2}, {0xFB2A, 2973, 2},
    {0xFB2B, 2975, 2}, {0xFB2C, 2977, 2}, {0xFB2D, 2979, 2}, {0xFB2E, 2981, 2},
    {0xFB2F, 2983, 2}, {0xFB30, 2985, 2}, {0xFB31, 2987, 2}, {0xFB32, 2989, 2},
    {0xFB33, 2991, 2}, {0xFB34, 2993, 2}, {0xFB35, 2995, 2}, {0xFB36, 2997, 2},
    {0xFB38, 2999, 2}, {0xFB39, 3001, 2}, {0xFB3A, 3003, 2}, {0xFB3B, 3005, 2},
    {0xFB3C, 3007, 2}, {0xFB3E, 3009, 2}, {0xFB40, 3011, 2}, {0xFB41, 3013, 2},
    {0xFB43, 3015, 2}, {0xFB44, 3017, 2}, {0xFB46, 3019, 2}, {0xFB47, 3021, 2},
    {0xFB48, 3023, 2}, {0xFB49, 3025, 2}, {0xFB4A, 3027, 2}, {0xFB4B, 3029, 2},
    {0xFB4C, 3031, 2}, {0xFB4D, 3033, 2}, {0xFB4E, 3035, 2}, {0xFE00, 3037, 0},
    {0xFE01, 3037, 0}, {0xFE02, 3037, 0}, {0xFE03, 3037, 0}, {0xFE04, 3037, 0},
    {0xFE05, 3037, 0}, {0xFE06, 3037, 0}, {0xFE07, 3037, 0}, {0xFE08, 3037, 0},
    {0xFE09, 3037, 0}, {0xFE0A, 3037, 0}, {0xFE0B, 3037, 0}, {0xFE0C, 3037, 0},
    {0xFE0D, 3037, 0}, {0xFE0E, 3037, 0}, {0xFE0F, 3037, 0}, {0xFE20, 3037, 0},
    {0xFE21, 3037, 0}, {0xFE22, 3037, 0}, {0xFE23, 3037, 0}, {0xFE24, 3037, 0},
    {0xFE25, 3037, 0}, {0xFE26, 3037, 0}, {0xFE27, 3037, 0}, {0xFE28, 3037, 0},
    {0xFE29, 3037, 0}, {0xFE2A, 3037, 0}, {0xFE2B, 3037, 0}, {0xFE2C, 3037, 0},
    {0xFE2D, 3037, 0}, {0xFE2E, 3037, 0}, {0xFE2F, 3037, 0}, {0x101FD, 3037, 0},
    {0x102E0, 3037, 0}, {0x10376, 3037, 0}, {0x10377, 3037, 0}, {0x10378, 3037, 0},
    {0x10379, 3037, 0}, {0x1037A, 3037, 0}, {0x10A01, 3037, 0}, {0x10A02, 3037, 0},
    {0x10A03, 3037, 0}, {0x10A05, 3037, 0}, {0x10A06, 3037, 0}, {0x10A0C, 3037, 0},
    {0x10A0D, 3037, 0}, {0x10A0E, 3037, 0}, {0x10A0F, 3037, 0}, {0x10A38, 3037, 0},
    {0x10A39, 3037, 0}, {0x10A3A, 3037, 0}, {0x10A3F, 3037, 0}, {0x10AE5, 3037, 0},
    {0x10AE6, 3037, 0}, {0x10D24, 3037, 0}, {0x10D25, 3037, 0}, {0x10D26, 3037, 0},
    {0x10D27, 3037, 0}, {0x10EAB, 3037, 0}, {0x10EAC, 3037, 0}, {0x10F46, 3037, 0},
    {0x10F47, 3037, 0}, {0x10F48, 3037, 0}, {0x10F49, 3037, 0}, {0x10F4A, 3037, 0},
    {0x10F4B, 3037, 0}, {0x10F4C, 3037, 0}, {0x10F4D, 3037, 0}, {0x10F4E, 3037, 0},
    {0x10F4F, 3037, 0}, {0x10F50, 3037, 0}, {0x11001, 3037, 0}, {0x11038, 3037, 0},
    {0x11039, 3037, 0}, {0x1103A, 3037, 0}, {0x1103B, 3037, 0}, {0x1103C, 3037, 0},
    {0x1103D, 3037, 0}, {0x1103E, 3037, 0}, {0x1103F, 3037, 0}, {0x11040, 3037, 0},
    {0x11041, 3037, 0}, {0x11042, 3037, 0}, {0x11043, 3037, 0}, {0x11044, 3037, 0},
    {0x11045, 3037, 0}, {0x11046, 3037, 0}, {0x1107F, 3037, 0}, {0x11080, 3037, 0},
    {0x11081, 3037, 0}, {0x1109A, 3037, 4}, {0x1109C, 3041, 4}, {0x110AB, 3045, 4},
    {0x110B3, 3049, 0}, {0x110B4, 3049, 0}, {0x110B5, 3049, 0}, {0x110B6, 3049, 0},
    {0x110B9, 3049, 0}, {0x110BA, 3049, 0}, {0x11100, 3049, 0}, {0x11101, 3049, 0},
    {0x11102, 3049, 0}, {0x11127, 3049, 0}, {0x11128, 3049, 0}, {0x11129, 3049, 0},
    {0x1112A, 3049, 0}, {0x1112B, 3049, 0}, {0x1112D, 3049, 0}, {0x1112E, 3049, 0},
    {0x1112F, 3049, 0}, {0x11130, 3049, 0}, {0x11131, 3049, 0}, {0x11132, 3049, 0},
    {0x11133, 3049, 0}, {0x11134, 3049, 0}, {0x11173, 3049, 0}, {0x11180, 3049, 0},
    {0x11181, 3049, 0}, {0x111B6, 3049, 0}, {0x111B7, 3049, 0}, {0x111B8, 3049, 0},
    {0x111B9, 3049, 0}, {0x111BA, 3049, 0}, {0x111BB, 3049, 0}, {0x111BC, 3049, 0},
    {0x111BD, 3049, 0}, {0x111BE, 3049, 0}, {0x111C9, 3049, 0}, {0x111CA, 3049, 0},
    {0x111CB, 3049, 0}, {0x111CC, 3049, 0}, {0x111CF, 3049, 0}, {0x1122F, 3049, 0},
    {0x11230, 3049, 0}, {0x11231, 3049, 0}, {0x11234, 3049, 0}, {0x11236, 3049, 0},
    {0x11237, 3049, 0}, {0x1123E, 3049, 0}, {0x112DF, 3049, 0}, {0x112E3, 3049, 0},
    {0x112E4, 3049, 0}, {0x112E5, 3049, 0}, {0x112E6, 3049, 0}, {0x112E7, 3049, 0},
    {0x112E8, 3049, 0}, {0x112E9, 3049, 0}, {0x112EA, 3049, 0}, {0x11300, 3049, 0},
    {0x11301, 3049, 0}, {0x1133B, 3049, 0}, {0x1133C, 3049, 0}, {0x11340, 3049, 0},
    {0x11366, 3049, 0}, {0x11367, 3049, 0}, {0x11368, 3049, 0}, {0x11369, 3049, 0},
    {0x1136A, 3049, 0}, {0x1136B, 3049, 0}, {0x1136C, 3049, 0}, {0x11370, 3049, 0},
    {0x11371, 3049, 0}, {0x11372, 3049, 0}, {0x11373, 3049, 0}, {0x11374, 3049, 0},
    {0x11438, 3049, 0}, {0x11439, 3049, 0}, {0x1143A, 3049, 0}, {0x1143B, 3049, 0},
    {0x1143C, 3049, 0}, {0x1143D, 3049, 0}, {0x1143E, 3049, 0}, {0x1143F, 3049, 0},
    {0x11442, 3049, 0}, {0x11443, 3049, 0}, {0x11444, 3049, 0}, {0x11446, 3049, 0},
    {0x1145E, 3049, 0}, {0x114B3, 3049, 0}, {0x114B4, 3049, 0}, {0x114B5, 3049, 0},
    {0x114B6, 3049, 0}, {0x114B7, 3049, 0}, {0x114B8, 3049, 0}, {0x114BA, 3049, 0},
    {0x114BB, 3049, 4}, {0x114BF, 3053, 0}, {0x114C0, 3053, 0}, {0x114C2, 3053, 0},
    {0x114C3, 3053, 0}, {0x115B2, 3053, 0}, {0x115B3, 3053, 0}, {0x115B4, 3053, 0},
    {0x115B5, 3053, 0}, {0x115BC, 3053, 0}, {0x115BD, 3053, 0}, {0x115BF, 3053, 0},
    {0x115C0, 3053, 0}, {0x115DC, 3053, 0}, {0x115DD, 3053, 0}, {0x11633, 3053, 0},
    {0x11634, 3053, 0}, {0x11635, 3053, 0}, {0x11636, 3053, 0}, {0x11637, 3053, 0},
    {0x11638, 3053, 0}, {0x11639, 3053, 0}, {0x1163A, 3053, 0}, {0x1163D, 3053, 0},
    {0x1163F, 3053, 0}, {0x11640, 3053, 0}, {0x116AB, 3053, 0}, {0x116AD, 3053, 0},
    {0x116B0, 3053, 0}, {0x116B1, 3053, 0}, {0x116B2, 3053, 0}, {0x116B3, 3053, 0},
    {0x116B4, 3053, 0}, {0x116B5, 3053, 0}, {0x116B7, 3053, 0}, {0x1171D, 3053, 0},
    {0x1171E, 3053, 0}, {0x1171F, 3053, 0}, {0x11722, 3053, 0}, {0x11723, 3053, 0},
    {0x11724, 3053, 0}, {0x11725, 3053, 0}, {0x11727, 3053, 0}, {0x11728, 3053, 0},
    {0x11729, 3053, 0}, {0x1172A, 3053, 0}, {0x1172B, 3053, 0}, {0x1182F, 3053, 0},
    {0x11830, 3053, 0}, {0x11831, 3053, 0}, {0x11832, 3053, 0}, {0x11833, 3053, 0},
    {0x11834, 3053, 0}, {0x11835, 3053, 0}, {0x11836, 3053, 0}, {0x11837, 3053, 0},
    {0x11839, 3053, 0}, {0x1183A, 3053, 0}, {0x1193B, 3053, 0}, {0x1193C, 3053, 0},
    {0x1193E, 3053, 0}, {0x11943, 3053, 0}, {0x119D4, 3053, 0}, {0x119D5, 3053, 0},
    {0x119D6, 3053, 0}, {0x119D7, 3053, 0}, {0x119DA, 3053, 0}, {0x119DB, 3053, 0},
    {0x119E0, 3053, 0}, {0x11A01, 3053, 0}, {0x11A02, 3053, 0}, {0x11A03, 3053, 0},
    {0x11A04, 3053, 0}, {0x11A05, 3053, 0}, {0x11A06, 3053, 0}, {0x11A07, 3053, 0},
    {0x11A08, 3053, 0}, {0x11A09, 3053, 0}, {0x11A0A, 3053, 0}, {0x11A33, 3053, 0},
    {0x11A34, 3053, 0}, {0x11A35, 3053, 0}, {0x11A36, 3053, 0}, {0x11A37, 3053, 0},
    {0x11A38, 3053, 0}, {0x11A3B, 3053, 0}, {0x11A3C, 3053, 0}, {0x11A3D, 3053, 0},
    {0x11A3E, 3053, 0}, {0x11A47, 3053, 0}, {0x11A51, 3053, 0}, {0x11A52, 3053, 0},
    {0x11A53, 3053, 0}, {0x11A54, 3053, 0}, {0x11A55, 3053, 0}, {0x11A56, 3053, 0},
    {0x11A59, 3053, 0}, {0x11A5A, 3053, 0}, {0x11A5B, 3053, 0}, {0x11A8A, 3053, 0},
    {0x11A8B, 3053, 0}, {0x11A8C, 3053, 0}, {0x11A8D, 3053, 0}, {0x11A8E, 3053, 0},
    {0x11A8F, 3053, 0}, {0x11A90, 3053, 0}, {0x11A91, 3053, 0}, {0x11A92, 3053, 0},
    {0x11A93, 3053, 0}, {0x11A94, 3053, 0}, {0x11A95, 3053, 0}, {0x11A96, 3053, 0},
    {0x11A98, 3053, 0}, {0x11A99, 3053, 0}, {0x11C30, 3053, 0}, {0x11C31, 3053, 0},
    {0x11C32, 3053, 0}, {0x11C33, 3053, 0}, {0x11C34, 3053, 0}, {0x11C35, 3053, 0},
    {0x11C36, 3053, 0}, {0x11C38, 3053, 0}, {0x11C39, 3053, 0}, {0x11C3A, 3053, 0},
    {0x11C3B, 3053, 0}, {0x11C3C, 3053, 0}, {0x11C3D, 3053, 0}, {0x11C3F, 3053, 0},
    {0x11C92, 3053, 0}, {0x11C93, 3053, 0}, {0x11C94, 3053, 0}, {0x11C95, 3053, 0},
    {0x11C96, 3053, 0}, {0x11C97, 3053, 0}, {0x11C98, 3053, 0}, {0x11C99, 3053, 0},
    {0x11C9A, 3053, 0}, {0x11C9B, 3053, 0}, {0x11C9C, 3053, 0}, {0x11C9D, 3053, 0},
    {0x11C9E, 3053, 0}, {0x11C9F, 3053, 0}, {0x11CA0, 3053, 0}, {0x11CA1, 3053, 0},
    {0x11CA2, 3053, 0}, {0x11CA3, 3053, 0}, {0x11CA4, 3053, 0}, {0x11CA5, 3053, 0},
    {0x11CA6, 3053, 0}, {0x11CA7, 3053, 0}, {0x11CAA, 3053, 0}, {0x11CAB, 3053, 0},
    {0x11CAC, 3053, 0}, {0x11CAD, 3053, 0}, {0x11CAE, 3053, 0}, {0x11CAF, 3053, 0},
    {0x11CB0, 3053, 0}, {0x11CB2, 3053, 0}, {0x11CB3, 3053, 0}, {0x11CB5, 3053, 0},
    {0x11CB6, 3053, 0}, {0x11D31, 3053, 0}, {0x11D32, 3053, 0}, {0x11D33, 3053, 0},
    {0x11D34, 3053, 0}, {0x11D35, 3053, 0}, {0x11D36, 3053, 0}, {0x11D3A, 3053, 0},
    {0x11D3C, 3053, 0}, {0x11D3D, 3053, 0}, {0x11D3F, 3053, 0}, {0x11D40, 3053, 0},
    {0x11D41, 3053, 0}, {0x11D42, 3053, 0}, {0x11D43, 3053, 0}, {0x11D44, 3053, 0},
    {0x11D45, 3053, 0}, {0x11D47, 3053, 0}, {0x11D90, 3053, 0}, {0x11D91, 3053, 0},
    {0x11D95, 3053, 0}, {0x11D97, 3053, 0}, {0x11EF3, 3053, 0}, {0x11EF4, 3053, 0},
    {0x16AF0, 3053, 0}, {0x16AF1, 3053, 0}, {0x16AF2, 3053, 0}, {0x16AF3, 3053, 0},
    {0x16AF4, 3053, 0}, {0x16B30, 3053, 0}, {0x16B31, 3053, 0}, {0x16B32, 3053, 0},
    {0x16B33, 3053, 0}, {0x16B34, 3053, 0}, {0x16B35, 3053, 0}, {0x16B36, 3053, 0},
    {0x16F4F, 3053, 0}, {0x16F8F, 3053, 0}, {0x16F90, 3053, 0}, {0x16F91, 3053, 0},
    {0x16F92, 3053, 0}, {0x16FE4, 3053, 0}, {0x1BC9D, 3053, 0}, {0x1BC9E, 3053, 0},
    {0x1D15E, 3053, 8}, {0x1D15F, 3061, 8}, {0x1D160, 3069, 12}, {0x1D161, 3081, 12},
    {0x1D162, 3093, 12}, {0x1D163, 3105, 12}, {0x1D164, 3117, 12}, {0x1D167, 3129, 0},
    {0x1D168, 3129, 0}, {0x1D169, 3129, 0}, {0x1D17B, 3129, 0}, {0x1D17C, 3129, 0},
    {0x1D17D, 3129, 0}, {0x1D17E, 3129, 0}, {0x1D17F, 3129, 0}, {0x1D180, 3129, 0},
    {0x1D181, 3129, 0}, {0x1D182, 3129, 0}, {0x1D185, 3129, 0}, {0x1D186, 3129, 0},
    {0x1D187, 3129, 0}, {0x1D188, 3129, 0}, {0x1D189, 3129, 0}, {0x1D18A, 3129, 0},
    {0x1D18B, 3129, 0}, {0x1D1AA, 3129, 0}, {0x1D1AB, 3129, 0}, {0x1D1AC, 3129, 0},
    {0x1D1AD, 3129, 0}, {0x1D1BB, 3129, 8}, {0x1D1BC, 3137, 8}, {0x1D1BD, 3145, 12},
    {0x1D1BE, 3157, 12}, {0x1D1BF, 3169, 12}, {0x1D1C0, 3181, 12}, {0x1D242, 3193, 0},
    {0x1D243, 3193, 0}, {0x1D244, 3193, 0}, {0x1DA00, 3193, 0}, {0x1DA01, 3193, 0},
    {0x1DA02, 3193, 0}, {0x1DA03, 3193, 0}, {0x1DA04, 3193, 0}, {0x1DA05, 3193, 0},
    {0x1DA06, 3193, 0}, {0x1DA07, 3193, 0}, {0x1DA08, 3193, 0}, {0x1DA09, 3193, 0},
    {0x1DA0A, 3193, 0}, {0x1DA0B, 3193, 0}, {0x1DA0C, 3193, 0}, {0x1DA0D, 3193, 0},
    {0x1DA0E, 3193, 0}, {0x1DA0F, 3193, 0}, {0x1DA10, 3193, 0}, {0x1DA11, 3193, 0},
    {0x1DA12, 3193, 0}, {0x1DA13, 3193, 0}, {0x1DA14, 3193, 0}, {0x1DA15, 3193, 0},
    {0x1DA16, 3193, 0}, {0x1DA17, 3193, 0}, {0x1DA18, 3193, 0}, {0x1DA19, 3193, 0},
    {0x1DA1A, 3193, 0}, {0x1DA1B, 3193, 0}, {0x1DA1C, 3193, 0}, {0x1DA1D, 3193, 0},
    {0x1DA1E, 3193, 0}, {0x1DA1F, 3193, 0}, {0x1DA20, 3193, 0}, {0x1DA21, 3193, 0},
    {0x1DA22, 3193, 0}, {0x1DA23, 3193, 0}, {0x1DA24, 3193, 0}, {0x1DA25, 3193, 0},
    {0x1DA26, 3193, 0}, {0x1DA27, 3193, 0}, {0x1DA28, 3193, 0}, {0x1DA29, 3193, 0},
    {0x1DA2A, 3193, 0}, {0x1DA2B, 3193, 0}, {0x1DA2C, 3193, 0}, {0x1DA2D, 3193, 0},
    {0x1DA2E, 3193, 0}, {0x1DA2F, 3193, 0}, {0x1DA30, 3193, 0}, {0x1DA31, 3193, 0},
    {0x1DA32, 3193, 0}, {0x1DA33, 3193, 0}, {0x1DA34, 3193, 0}, {0x1DA35, 3193, 0},
    {0x1DA36, 3193, 0}, {0x1DA3B, 3193, 0}, {0x1DA3C, 3193, 0}, {0x1DA3D, 3193, 0},
    {0x1DA3E, 3193, 0}, {0x1DA3F, 3193, 0}, {0x1DA40, 3193, 0}, {0x1DA41, 3193, 0},
    {0x1DA42, 3193, 0}, {0x1DA43, 3193, 0}, {0x1DA44, 3193, 0}, {0x1DA45, 3193, 0},
    {0x1DA46, 3193, 0}, {0x1DA47, 3193, 0}, {0x1DA48, 3193, 0}, {0x1DA49, 3193, 0},
    {0x1DA4A, 3193, 0}, {0x1DA4B, 3193, 0}, {0x1DA4C, 3193, 0}, {0x1DA4D, 3193, 0},
    {0x1DA4E, 3193, 0}, {0x1DA4F, 3193, 0}, {0x1DA50, 3193, 0}, {0x1DA51, 3193, 0},
    {0x1DA52, 3193, 0}, {0x1DA53, 3193, 0}, {0x1DA54, 3193, 0}, {0x1DA55, 3193, 0},
    {0x1DA56, 3193, 0}, {0x1DA57, 3193, 0}, {0x1DA58, 3193, 0}, {0x1DA59, 3193, 0},
    {0x1DA5A, 3193, 0}, {0x1DA5B, 3193, 0}, {0x1DA5C, 3193, 0}, {0x1DA5D, 3193, 0},
    {0x1DA5E, 3193, 0}, {0x1DA5F, 3193, 0}, {0x1DA60, 3193, 0}, {0x1DA61, 3193, 0},
    {0x1DA62, 3193, 0}, {0x1DA63, 3193, 0}, {0x1DA64, 3193, 0}, {0x1DA65, 3193, 0},
    {0x1DA66, 3193, 0}, {0x1DA67, 3193, 0}, {0x1DA68, 3193, 0}, {0x1DA69, 3193, 0},
    {0x1DA6A, 3193, 0}, {0x1DA6B, 3193, 0}, {0x1DA6C, 3193, 0}, {0x1DA75, 3193, 0},
    {0x1DA84, 3193, 0}, {0x1DA9B, 3193, 0}, {0x1DA9C, 3193, 0}, {0x1DA9D, 3193, 0},
    {0x1DA9E, 3193, 0}, {0x1DA9F, 3193, 0}, {0x1DAA1, 3193, 0}, {0x1DAA2, 3193, 0},
    {0x1DAA3, 3193, 0}, {0x1DAA4, 3193, 0}, {0x1DAA5, 3193, 0}, {0x1DAA6, 3193, 0},
    {0x1DAA7, 3193, 0}, {0x1DAA8, 3193, 0}, {0x1DAA9, 3193, 0}, {0x1DAAA, 3193, 0},
    {0x1DAAB, 3193, 0}, {0x1DAAC, 3193, 0}, {0x1DAAD, 3193, 0}, {0x1DAAE, 3193, 0},
    {0x1DAAF, 3193, 0}, {0x1E000, 3193, 0}, {0x1E001, 3193, 0}, {0x1E002, 3193, 0},
    {0x1E003, 3193, 0}, {0x1E004, 3193, 0}, {0x1E005, 3193, 0}, {0x1E006, 3193, 0},
    {0x1E008, 3193, 0}, {0x1E009, 3193, 0}, {0x1E00A, 3193, 0}, {0x1E00B, 3193, 0},
    {0x1E00C, 3193, 0}, {0x1E00D, 3193, 0}, {0x1E00E, 3193, 0}, {0x1E00F, 3193, 0},
    {0x1E010, 3193, 0}, {0x1E011, 3193, 0}, {0x1E012, 3193, 0}, {0x1E013, 3193, 0},
    {0x1E014, 3193, 0}, {0x1E015, 3193, 0}, {0x1E016, 3193, 0}, {0x1E017, 3193, 0},
    {0x1E018, 3193, 0}, {0x1E01B, 3193, 0}, {0x1E01C, 3193, 0}, {0x1E01D, 3193, 0},
    {0x1E01E, 3193, 0}, {0x1E01F, 3193, 0}, {0x1E020, 3193, 0}, {0x1E021, 3193, 0},
    {0x1E023, 3193, 0}, {0x1E024, 3193, 0}, {0x1E026, 3193, 0}, {0x1E027, 3193, 0},
    {0x1E028, 3193, 0}, {0x1E029, 3193, 0}, {0x1E02A, 3193, 0}, {0x1E130, 3193, 0},
    {0x1E131, 3193, 0}, {0x1E132, 3193, 0}, {0x1E133, 3193, 0}, {0x1E134, 3193, 0},
    {0x1E135, 3193, 0}, {0x1E136, 3193, 0}, {0x1E2EC, 3193, 0}, {0x1E2ED, 3193, 0},
    {0x1E2EE, 3193, 0}, {0x1E2EF, 3193, 0}, {0x1E8D0, 3193, 0}, {0x1E8D1, 3193, 0},
    {0x1E8D2, 3193, 0}, {0x1E8D3, 3193, 0}, {0x1E8D4, 3193, 0}, {0x1E8D5, 3193, 0},
    {0x1E8D6, 3193, 0}, {0x1E944, 3193, 0}, {0x1E945, 3193, 0}, {0x1E946, 3193, 0},
    {0x1E947, 3193, 0}, {0x1E948, 3193, 0}, {0x1E949, 3193, 0}, {0x1E94A, 3193, 0},
    {0x2F800, 3193, 3}, {0x2F801, 3196, 3}, {0x2F802, 3199, 3}, {0x2F803, 3202, 4},
    {0x2F804, 3206, 3}, {0x2F805, 3209, 3}, {0x2F806, 3212, 3}, {0x2F807, 3215, 3},
    {0x2F808, 3218, 3}, {0x2F809, 3221, 3}, {0x2F80A, 3224, 3}, {0x2F80B, 3227, 3},
    {0x2F80C, 3230, 3}, {0x2F80D, 3233, 4}, {0x2F80E, 3237, 3}, {0x2F80F, 3240, 3},
    {0x2F810, 3243, 3}, {0x2F811, 3246, 3}, {0x2F812, 3249, 4}, {0x2F813, 3253, 3},
    {0x2F814, 3256, 3}, {0x2F815, 3259, 3}, {0x2F816, 3262, 4}, {0x2F817, 3266, 3},
    {0x2F818, 3269, 3}, {0x2F819, 3272, 3}, {0x2F81A, 3275, 3}, {0x2F81B, 3278, 3},
    {0x2F81C, 3281, 4}, {0x2F81D, 3285, 3}, {0x2F81E, 3288, 3}, {0x2F81F, 3291, 3},
    {0x2F820, 3294, 3}, {0x2F821, 3297, 3}, {0x2F822, 3300, 3}, {0x2F823, 3303, 3},
    {0x2F824, 3306, 3}, {0x2F825, 3309, 3}, {0x2F826, 3312, 3}, {0x2F827, 3315, 3},
    {0x2F828, 3318, 3}, {0x2F829, 3321, 3}, {0x2F82A, 3324, 3}, {0x2F82B, 3327, 3},
    {0x2F82C, 3330, 3}, {0x2F82D, 3333, 3}, {0x2F82E, 3336, 3}, {0x2F82F, 3339, 3},
    {0x2F830, 3342, 3}, {0x2F831, 3345, 3}, {0x2F832, 3348, 3}, {0x2F833, 3351, 3},
    {0x2F834, 3354, 4}, {0x2F835, 3358, 3}, {0x2F836, 3361, 3}, {0x2F837, 3364, 3},
    {0x2F838, 3367, 4}, {0x2F839, 3371, 3}, {0x2F83A, 3374, 3}, {0x2F83B, 3377, 3},
    {0x2F83C, 3380, 3}, {0x2F83D, 3383, 3}, {0x2F83E, 3386, 3}, {0x2F83F, 3389, 3},
    {0x2F840, 3392, 3}, {0x2F841, 3395, 3}, {0x2F842, 3398, 3}, {0x2F843, 3401, 3},
    {0x2F844, 3404, 3}, {0x2F845, 3407, 3}, {0x2F846, 3410, 3}, {0x2F847, 3413, 3},
    {0x2F848, 3416, 3}, {0x2F849, 3419, 3}, {0x2F84A, 3422, 3}, {0x2F84B, 3425, 3},
    {0x2F84C, 3428, 3}, {0x2F84D, 3431, 3}, {0x2F84E, 3434, 3}, {0x2F84F, 3437, 3},
    {0x2F850, 3440, 3}, {0x2F851, 3443, 3}, {0x2F852, 3446, 3}, {0x2F853, 3449, 3},
    {0x2F854, 3452, 3}, {0x2F855, 3455, 3}, {0x2F856, 3458, 3}, {0x2F857, 3461, 3},
    {0x2F858, 3464, 3}, {0x2F859, 3467, 4}, {0x2F85A, 3471, 3}, {0x2F85B, 3474, 3},
    {0x2F85C, 3477, 3}, {0x2F85D, 3480, 3}, {0x2F85E, 3483, 3}, {0x2F85F, 3486, 3},
    {0x2F860, 3489, 4}, {0x2F861, 3493, 4}, {0x2F862, 3497, 3}, {0x2F863, 3500, 3},
    {0x2F864, 3503, 3}, {0x2F865, 3506, 3}, {0x2F866, 3509, 3}, {0x2F867, 3512, 3},
    {0x2F868, 3515, 3}, {0x2F869, 3518, 3}, {0x2F86A, 3521, 3}, {0x2F86B, 3524, 3},
    {0x2F86C, 3527, 4}, {0x2F86D, 3531, 3}, {0x2F86E, 3534, 3}, {0x2F86F, 3537, 3},
    {0x2F870, 3540, 3}, {0x2F871, 3543, 4}, {0x2F872, 3547, 3}, {0x2F873, 3550, 3},
    {0x2F874, 3553, 3}, {0x2F875, 3556, 3}, {0x2F876, 3559, 3}, {0x2F877, 3562, 3},
    {0x2F878, 3565, 3}, {0x2F879, 3568, 3}, {0x2F87A, 3571, 3}, {0x2F87B, 3574, 4},
    {0x2F87C, 3578, 3}, {0x2F87D, 3581, 4}, {0x2F87E, 3585, 3}, {0x2F87F, 3588, 3},
    {0x2F880, 3591, 3}, {0x2F881, 3594, 3}, {0x2F882, 3597, 3}, {0x2F883, 3600, 3},
    {0x2F884, 3603, 3}, {0x2F885, 3606, 3}, {0x2F886, 3609, 3}, {0x2F887, 3612, 3},
    {0x2F888, 3615, 3}, {0x2F889, 3618, 4}, {0x2F88A, 3622, 3}, {0x2F88B, 3625, 3},
    {0x2F88C, 3628, 3}, {0x2F88D, 3631, 3}, {0x2F88E, 3634, 3}, {0x2F88F, 3637, 4},
    {0x2F890, 3641, 3}, {0x2F891, 3644, 4}, {0x2F892, 3648, 4}, {0x2F893, 3652, 3},
    {0x2F894, 3655, 3}, {0x2F895, 3658, 3}, {0x2F896, 3661, 3}, {0x2F897, 3664, 4},
    {0x2F898, 3668, 4}, {0x2F899, 3672, 3}, {0x2F89A, 3675, 3}, {0x2F89B, 3678, 3},
    {0x2F89C, 3681, 3}, {0x2F89D, 3684, 3}, {0x2F89E, 3687, 3}, {0x2F89F, 3690, 3},
    {0x2F8A0, 3693, 3}, {0x2F8A1, 3696, 3}, {0x2F8A2, 3699, 3}, {0x2F8A3, 3702, 3},
    {0x2F8A4, 3705, 4}, {0x2F8A5, 3709, 3}, {0x2F8A6, 3712, 3}, {0x2F8A7, 3715, 3},
    {0x2F8A8, 3718, 3}, {0x2F8A9, 3721, 3}, {0x2F8AA, 3724, 3}, {0x2F8AB, 3727, 3},
    {0x2F8AC, 3730, 3}, {0x2F8AD, 3733, 3}, {0x2F8AE, 3736, 3}, {0x2F8AF, 3739, 3},
    {0x2F8B0, 3742, 3}, {0x2F8B1, 3745, 3}, {0x2F8B2, 3748, 3}, {0x2F8B3, 3751, 3},
    {0x2F8B4, 3754, 3}, {0x2F8B5, 3757, 3}, {0x2F8B6, 3760, 3}, {0x2F8B7, 3763, 3},
    {0x2F8B8, 3766, 4}, {0x2F8B9, 3770, 3}, {0x2F8BA, 3773, 3}, {0x2F8BB, 3776, 3},
    {0x2F8BC, 3779, 3}, {0x2F8BD, 3782, 3}, {0x2F8BE, 3785, 4}, {0x2F8BF, 3789, 3},
    {0x2F8C0, 3792, 3}, {0x2F8C1, 3795, 3}, {0x2F8C2, 3798, 3}, {0x2F8C3, 3801, 3},
    {0x2F8C4, 3804, 3}, {0x2F8C5, 3807, 3}, {0x2F8C6, 3810, 3}, {0x2F8C7, 3813, 3},
    {0x2F8C8, 3816, 3}, {0x2F8C9, 3819, 3}, {0x2F8CA, 3822, 4}, {0x2F8CB, 3826, 3},
    {0x2F8CC, 3829, 3}, {0x2F8CD, 3832, 3}, {0x2F8CE, 3835, 3}, {0x2F8CF, 3838, 3},
    {0x2F8D0, 3841, 3}, {0x2F8D1, 3844, 3}, {0x2F8D2, 3847, 3}, {0x2F8D3, 3850, 3},
    {0x2F8D4, 3853, 3}, {0x2F8D5, 3856, 3}, {0x2F8D6, 3859, 3}, {0x2F8D7, 3862, 3},
    {0x2F8D8, 3865, 3}, {0x2F8D9, 3868, 3}, {0x2F8DA, 3871, 3}, {0x2F8DB, 3874, 3},
    {0x2F8DC, 3877, 3}, {0x2F8DD, 3880, 4}, {0x2F8DE, 3884, 3}, {0x2F8DF, 3887, 3},
    {0x2F8E0, 3890, 3}, {0x2F8E1, 3893, 3}, {0x2F8E2, 3896, 3}, {0x2F8E3, 3899, 4},
    {0x2F8E4, 3903, 3}, {0x2F8E5, 3906, 3}, {0x2F8E6, 3909, 3}, {0x2F8E7, 3912, 3},
    {0x2F8E8, 3915, 3}, {0x2F8E9, 3918, 3}, {0x2F8EA, 3921, 3}, {0x2F8EB, 3924, 3},
    {0x2F8EC, 3927, 4}, {0x2F8ED, 3931, 3}, {0x2F8EE, 3934, 3}, {0x2F8EF, 3937, 3},
    {0x2F8F0, 3940, 4}, {0x2F8F1, 3944, 3}, {0x2F8F2, 3947, 3}, {0x2F8F3, 3950, 3},
    {0x2F8F4, 3953, 3}, {0x2F8F5, 3956, 3}, {0x2F8F6, 3959, 3}, {0x2F8F7, 3962, 4},
    {0x2F8F8, 3966, 4}, {0x2F8F9, 3970, 4}, {0x2F8FA, 3974, 3}, {0x2F8FB, 3977, 4},
    {0x2F8FC, 3981, 3}, {0x2F8FD, 3984, 3}, {0x2F8FE, 3987, 3}, {0x2F8FF, 3990, 3},
    {0x2F900, 3993, 3}, {0x2F901, 3996, 3}, {0x2F902, 3999, 3}, {0x2F903, 4002, 3},
    {0x2F904, 4005, 3}, {0x2F905, 4008, 3}, {0x2F906, 4011, 4}, {0x2F907, 4015, 3},
    {0x2F908, 4018, 3}, {0x2F909, 4021, 3}, {0x2F90A, 4024, 3}, {0x2F90B, 4027, 3},
    {0x2F90C, 4030, 3}, {0x2F90D, 4033, 4}, {0x2F90E, 4037, 3}, {0x2F90F, 4040, 3},
    {0x2F910, 4043, 4}, {0x2F911, 4047, 4}, {0x2F912, 4051, 3}, {0x2F913, 4054, 3},
    {0x2F914, 4057, 3}, {0x2F915, 4060, 3}, {0x2F916, 4063, 3}, {0x2F917, 4066, 3},
    {0x2F918, 4069, 3}, {0x2F919, 4072, 3}, {0x2F91A, 4075, 3}, {0x2F91B, 4078, 4},
    {0x2F91C, 4082, 3}, {0x2F91D, 4085, 4}, {0x2F91E, 4089, 3}, {0x2F91F, 4092, 4},
    {0x2F920, 4096, 3}, {0x2F921, 4099, 3}, {0x2F922, 4102, 3}, {0x2F923, 4105, 4},
    {0x2F924, 4109, 3}, {0x2F925, 4112, 3}, {0x2F926, 4115, 4}, {0x2F927, 4119, 4},
    {0x2F928, 4123, 3}, {0x2F929, 4126, 3}, {0x2F92A, 4129, 3}, {0x2F92B, 4132, 3},
    {0x2F92C, 4135, 3}, {0x2F92D, 4138, 3}, {0x2F92E, 4141, 3}, {0x2F92F, 4144, 3},
    {0x2F930, 4147, 3}, {0x2F931, 4150, 3}, {0x2F932, 4153, 3}, {0x2F933, 4156, 3},
    {0x2F934, 4159, 3}, {0x2F935, 4162, 4}, {0x2F936, 4166, 3}, {0x2F937, 4169, 4},
    {0x2F938, 4173, 3}, {0x2F939, 4176, 4}, {0x2F93A, 4180, 3}, {0x2F93B, 4183, 4},
    {0x2F93C, 4187, 4}, {0x2F93D, 4191, 4}, {0x2F93E, 4195, 3}, {0x2F93F, 4198, 3},
    {0x2F940, 4201, 3}, {0x2F941, 4204, 4}, {0x2F942, 4208, 4}, {0x2F943, 4212, 4},
    {0x2F944, 4216, 4}, {0x2F945, 4220, 3}, {0x2F946, 4223, 3}, {0x2F947, 4226, 3},
    {0x2F948, 4229, 3}, {0x2F949, 4232, 3}, {0x2F94A, 4235, 3}, {0x2F94B, 4238, 3},
    {0x2F94C, 4241, 3}, {0x2F94D, 4244, 4}, {0x2F94E, 4248, 3}, {0x2F94F, 4251, 3},
    {0x2F950, 4254, 3}, {0x2F951, 4257, 3}, {0x2F952, 4260, 4}, {0x2F953, 4264, 3},
    {0x2F954, 4267, 4}, {0x2F955, 4271, 4}, {0x2F956, 4275, 3}, {0x2F957, 4278, 3},
    {0x2F958, 4281, 3}, {0x2F959, 4284, 3}, {0x2F95A, 4287, 3}, {0x2F95B, 4290, 3},
    {0x2F95C, 4293, 4}, {0x2F95D, 4297, 4}, {0x2F95E, 4301, 4}, {0x2F95F, 4305, 3},
    {0x2F960, 4308, 3}, {0x2F961, 4311, 4}, {0x2F962, 4315, 3}, {0x2F963, 4318, 3},
    {0x2F964, 4321, 3}, {0x2F965, 4324, 4}, {0x2F966, 4328, 3}, {0x2F967, 4331, 3},
    {0x2F968, 4334, 3}, {0x2F969, 4337, 3}, {0x2F96A, 4340, 3}, {0x2F96B, 4343, 4},
    {0x2F96C, 4347, 3}, {0x2F96D, 4350, 3}, {0x2F96E, 4353, 3}, {0x2F96F, 4356, 3},
    {0x2F970, 4359, 3}, {0x2F971, 4362, 3}, {0x2F972, 4365, 4}, {0x2F973, 4369, 4},
    {0x2F974, 4373, 3}, {0x2F975, 4376, 4}, {0x2F976, 4380, 3}, {0x2F977, 4383, 4},
    {0x2F978, 4387, 3}, {0x2F979, 4390, 3}, {0x2F97A, 4393, 3}, {0x2F97B, 4396, 4},
    {0x2F97C, 4400, 4}, {0x2F97D, 4404, 3}, {0x2F97E, 4407, 4}, {0x2F97F, 4411, 3},
    {0x2F980, 4414, 4}, {0x2F981, 4418, 3}, {0x2F982, 4421, 3}, {0x2F983, 4424, 3},
    {0x2F984, 4427, 3}, {0x2F985, 4430, 3}, {0x2F986, 4433, 3}, {0x2F987, 4436, 4},
    {0x2F988, 4440, 4}, {0x2F989, 4444, 4}, {0x2F98A, 4448, 4}, {0x2F98B, 4452, 3},
    {0x2F98C, 4455, 3}, {0x2F98D, 4458, 3}, {0x2F98E, 4461, 3}, {0x2F98F, 4464, 3},
    {0x2F990, 4467, 3}, {0x2F991, 4470, 3}, {0x2F992, 4473, 3}, {0x2F993, 4476, 3},
    {0x2F994, 4479, 3}, {0x2F995, 4482, 3}, {0x2F996, 4485, 3}, {0x2F997, 4488, 4},
    {0x2F998, 4492, 3}, {0x2F999, 4495, 3}, {0x2F99A, 4498, 3}, {0x2F99B, 4501, 3},
    {0x2F99C, 4504, 3}, {0x2F99D, 4507, 3}, {0x2F99E, 4510, 3}, {0x2F99F, 4513, 3},
    {0x2F9A0, 4516, 3}, {0x2F9A1, 4519, 3}, {0x2F9A2, 4522, 3}, {0x2F9A3, 4525, 3},
    {0x2F9A4, 4528, 4}, {0x2F9A5, 4532, 4}, {0x2F9A6, 4536, 4}, {0x2F9A7, 4540, 3},
    {0x2F9A8, 4543, 3}, {0x2F9A9, 4546, 3}, {0x2F9AA, 4549, 3}, {0x2F9AB, 4552, 4},
    {0x2F9AC, 4556, 3}, {0x2F9AD, 4559, 4}, {0x2F9AE, 4563, 3}, {0x2F9AF, 4566, 3},
    {0x2F9B0, 4569, 4}, {0x2F9B1, 4573, 4}, {0x2F9B2, 4577, 3}, {0x2F9B3, 4580, 3},
    {0x2F9B4, 4583, 3}, {0x2F9B5, 4586, 3}, {0x2F9B6, 4589, 3}, {0x2F9B7, 4592, 3},
    {0x2F9B8, 4595, 3}, {0x2F9B9, 4598, 3}, {0x2F9BA, 4601, 3}, {0x2F9BB, 4604, 3},
    {0x2F9BC, 4607, 3}, {0x2F9BD, 4610, 3}, {0x2F9BE, 4613, 3}, {0x2F9BF, 4616, 3},
    {0x2F9C0, 4619, 3}, {0x2F9C1, 4622, 3}, {0x2F9C2, 4625, 3}, {0x2F9C3, 4628, 3},
    {0x2F9C4, 4631, 3}, {0x2F9C5, 4634, 4}, {0x2F9C6, 4638, 3}, {0x2F9C7, 4641, 3},
    {0x2F9C8, 4644, 3}, {0x2F9C9, 4647, 3}, {0x2F9CA, 4650, 3}, {0x2F9CB, 4653, 4},
    {0x2F9CC, 4657, 4}, {0x2F9CD, 4661, 3}, {0x2F9CE, 4664, 3}, {0x2F9CF, 4667, 3},
    {0x2F9D0, 4670, 3}, {0x2F9D1, 4673, 3}, {0x2F9D2, 4676, 3}, {0x2F9D3, 4679, 4},
    {0x2F9D4, 4683, 3}, {0x2F9D5, 4686, 3}, {0x2F9D6, 4689, 3}, {0x2F9D7, 4692, 3},
    {0x2F9D8, 4695, 4}, {0x2F9D9, 4699, 4}, {0x2F9DA, 4703, 3}, {0x2F9DB, 4706, 3},
    {0x2F9DC, 4709, 3}, {0x2F9DD, 4712, 4}, {0x2F9DE, 4716, 3}, {0x2F9DF, 4719, 3},
    {0x2F9E0, 4722, 4}, {0x2F9E1, 4726, 4}, {0x2F9E2, 4730, 3}, {0x2F9E3, 4733, 3},
    {0x2F9E4, 4736, 3}, {0x2F9E5, 4739, 4}, {0x2F9E6, 4743, 3}, {0x2F9E7, 4746, 3},
    {0x2F9E8, 4749, 3}, {0x2F9E9, 4752, 3}, {0x2F9EA, 4755, 3}, {0x2F9EB, 4758, 3},
    {0x2F9EC, 4761, 3}, {0x2F9ED, 4764, 4}, {0x2F9EE, 4768, 3}, {0x2F9EF, 4771, 3},
    {0x2F9F0, 4774, 3}, {0x2F9F1, 4777, 4}, {0x2F9F2, 4781, 3}, {0x2F9F3, 4784, 3},
    {0x2F9F4, 4787, 3}, {0x2F9F5, 4790, 3}, {0x2F9F6, 4793, 4}, {0x2F9F7, 4797, 4},
    {0x2F9F8, 4801, 3}, {0x2F9F9, 4804, 3}, {0x2F9FA, 4807, 3}, {0x2F9FB, 4810, 4},
    {0x2F9FC, 4814, 3}, {0x2F9FD, 4817, 4}, {0x2F9FE, 4821, 3}, {0x2F9FF, 4824, 3},
    {0x2FA00, 4827, 3}, {0x2FA01, 4830, 4}, {0x2FA02, 4834, 3}, {0x2FA03, 4837, 3},
    {0x2FA04, 4840, 3}, {0x2FA05, 4843, 3}, {0x2FA06, 4846, 3}, {0x2FA07, 4849, 3},
    {0x2FA08, 4852, 3}, {0x2FA09, 4855, 4}, {0x2FA0A, 4859, 3}, {0x2FA0B, 4862, 3},
    {0x2FA0C, 4865, 3}, {0x2FA0D, 4868, 3}, {0x2FA0E, 4871, 3}, {0x2FA0F, 4874, 3},
    {0x2FA10, 4877, 4}, {0x2FA11, 4881, 3}, {0x2FA12, 4884, 4}, {0x2FA13, 4888, 4},
    {0x2FA14, 4892, 4}, {0x2FA15, 4896, 3}, {0x2FA16, 4899, 3}, {0x2FA17, 4902, 3},
    {0x2FA18, 4905, 3}, {0x2FA19, 4908, 3}, {0x2FA1A, 4911, 3}, {0x2FA1B, 4914, 3},
    {0x2FA1C, 4917, 3}, {0x2FA1D, 4920, 4}, {0xE0100, 4924, 0}, {0xE0101, 4924, 0},
    {0xE0102, 4924, 0}, {0xE0103, 4924, 0}, {0xE0104, 4924, 0}, {0xE0105, 4924, 0},
    {0xE0106, 4924, 0}, {0xE0107, 4924, 0}, {0xE0108, 4924, 0}, {0xE0109, 4924, 0},
    {0xE010A, 4924, 0}, {0xE010B, 4924, 0}, {0xE010C, 4924, 0}, {0xE010D, 4924, 0},
    {0xE010E, 4924, 0}, {0xE010F, 4924, 0}, {0xE0110, 4924, 0}, {0xE0111, 4924, 0},
    {0xE0112, 4924, 0}, {0xE0113, 4924, 0}, {0xE0114, 4924, 0}, {0xE0115, 4924, 0},
    {0xE0116, 4924, 0}, {0xE0117, 4924, 0}, {0xE0118, 4924, 0}, {0xE0119, 4924, 0},
    {0xE011A, 4924, 0}, {0xE011B, 4924, 0}, {0xE011C, 4924, 0}, {0xE011D, 4924, 0},
    {0xE011E, 4924, 0}, {0xE011F, 4924, 0}, {0xE0120, 4924, 0}, {0xE0121, 4924, 0},
    {0xE0122, 4924, 0}, {0xE0123, 4924, 0}, {0xE0124, 4924, 0}, {0xE0125, 4924, 0},
    {0xE0126, 4924, 0}, {0xE0127, 4924, 0}, {0xE0128, 4924, 0}, {0xE0129, 4924, 0},
    {0xE012A, 4924, 0}, {0xE012B, 4924, 0}, {0xE012C, 4924, 0}, {0xE012D, 4924, 0},
    {0xE012E, 4924, 0}, {0xE012F, 4924, 0}, {0xE0130, 4924, 0}, {0xE0131, 4924, 0},
    {0xE0132, 4924, 0}, {0xE0133, 4924, 0}, {0xE0134, 4924, 0}, {0xE0135, 4924, 0},
    {0xE0136, 4924, 0}, {0xE0137, 4924, 0}, {0xE0138, 4924, 0}, {0xE0139, 4924, 0},
    {0xE013A, 4924, 0}, {0xE013B, 4924, 0}, {0xE013C, 4924, 0}, {0xE013D, 4924, 0},
    {0xE013E, 4924, 0}, {0xE013F, 4924, 0}, {0xE0140, 4924, 0}, {0xE0141, 4924, 0},
    {0xE0142, 4924, 0}, {0xE0143, 4924, 0}, {0xE0144, 4924, 0}, {0xE0145, 4924, 0},
    {0xE0146, 4924, 0}, {0xE0147, 4924, 0}, {0xE0148, 4924, 0}, {0xE0149, 4924, 0},
    {0xE014A, 4924, 0}, {0xE014B, 4924, 0}, {0xE014C, 4924, 0}, {0xE014D, 4924, 0},
    {0xE014E, 4924, 0}, {0xE014F, 4924, 0}, {0xE0150, 4924, 0}, {0xE0151, 4924, 0},
    {0xE0152, 4924, 0}, {0xE0153, 4924, 0}, {0xE0154, 4924, 0}, {0xE0155, 4924, 0},
    {0xE0156, 4924, 0}, {0xE0157, 4924, 0}, {0xE0158, 4924, 0}, {0xE0159, 4924, 0},
    {0xE015A, 4924, 0}, {0xE015B, 4924, 0}, {0xE015C, 4924, 0}, {0xE015D, 4924, 0},
    {0xE015E, 4924, 0}, {0xE015F, 4924, 0}, {0xE0160, 4924, 0}, {0xE0161, 4924, 0},
    {0xE0162, 4924, 0}, {0xE0163, 4924, 0}, {0xE0164, 4924, 0}, {0xE0165, 4924, 0},
    {0xE0166, 4924, 0}, {0xE0167, 4924, 0}, {0xE0168, 4924, 0}, {0xE0169, 4924, 0},
    {0xE016A, 4924, 0}, {0xE016B, 4924, 0}, {0xE016C, 4924, 0}, {0xE016D, 4924, 0},
    {0xE016E, 4924, 0}, {0xE016F, 4924, 0}, {0xE0170, 4924, 0}, {0xE0171, 4924, 0},
    {0xE0172, 4924, 0}, {0xE0173, 4924, 0}, {0xE0174, 4924, 0}, {0xE0175, 4924, 0},
    {0xE0176, 4924, 0}, {0xE0177, 4924, 0}, {0xE0178, 4924, 0}, {0xE0179, 4924, 0},
    {0xE017A, 4924, 0}, {0xE017B, 4924, 0}, {0xE017C, 4924, 0}, {0xE017D, 4924, 0},
    {0xE017E, 4924, 0}, {0xE017F, 4924, 0}, {0xE0180, 4924, 0}, {0xE0181, 4924, 0},
    {0xE0182, 4924, 0}, {0xE0183, 4924, 0}, {0xE0184, 4924, 0}, {0xE0185, 4924, 0},
    {0xE0186, 4924, 0}, {0xE0187, 4924, 0}, {0xE0188, 4924, 0}, {0xE0189, 4924, 0},
    {0xE018A, 4924, 0}, {0xE018B, 4924, 0}, {0xE018C, 4924, 0}, {0xE018D, 4924, 0},
    {0xE018E, 4924, 0}, {0xE018F, 4924, 0}, {0xE0190, 4924, 0}, {0xE0191, 4924, 0},
    {0xE0192, 4924, 0}, {0xE0193, 4924, 0}, {0xE0194, 4924, 0}, {0xE0195, 4924, 0},
    {0xE0196, 4924, 0}, {0xE0197, 4924, 0}, {0xE0198, 4924, 0}, {0xE0199, 4924, 0},
    {0xE019A, 4924, 0}, {0xE019B, 4924, 0}, {0xE019C, 4924, 0}, {0xE019D, 4924, 0},
    {0xE019E, 4924, 0}, {0xE019F, 4924, 0}, {0xE01A0, 4924, 0}, {0xE01A1, 4924, 0},
    {0xE01A2, 4924, 0}, {0xE01A3, 4924, 0}, {0xE01A4, 4924, 0}, {0xE01A5, 4924, 0},
    {0xE01A6, 4924, 0}, {0xE01A7, 4924, 0}, {0xE01A8, 4924, 0}, {0xE01A9, 4924, 0},
    {0xE01AA, 4924, 0}, {0xE01AB, 4924, 0}, {0xE01AC, 4924, 0}, {0xE01AD, 4924, 0},
    {0xE01AE, 4924, 0}, {0xE01AF, 4924, 0}, {0xE01B0, 4924, 0}, {0xE01B1, 4924, 0},
    {0xE01B2, 4924, 0}, {0xE01B3, 4924, 0}, {0xE01B4, 4924, 0}, {0xE01B5, 4924, 0},
    {0xE01B6, 4924, 0}, {0xE01B7, 4924, 0}, {0xE01B8, 4924, 0}, {0xE01B9, 4924, 0},
    {0xE01BA, 4924, 0}, {0xE01BB, 4924, 0}, {0xE01BC, 4924, 0}, {0xE01BD, 4924, 0},
    {0xE01BE, 4924, 0}, {0xE01BF, 4924, 0}, {0xE01C0, 4924, 0}, {0xE01C1, 4924, 0},
    {0xE01C2, 4924, 0}, {0xE01C3, 4924, 0}, {0xE01C4, 4924, 0}, {0xE01C5, 4924, 0},
    {0xE01C6, 4924, 0}, {0xE01C7, 4924, 0}, {0xE01C8, 4924, 0}, {0xE01C9, 4924, 0},
    {0xE01CA, 4924, 0}, {0xE01CB, 4924, 0}, {0xE01CC, 4924, 0}, {0xE01CD, 4924, 0},
    {0xE01CE, 4924, 0}, {0xE01CF, 4924, 0}, {0xE01D0, 4924, 0}, {0xE01D1, 4924, 0},
    {0xE01D2, 4924, 0}, {0xE01D3, 4924, 0}, {0xE01D4, 4924, 0}, {0xE01D5, 4924, 0},
    {0xE01D6, 4924, 0}, {0xE01D7, 4924, 0}, {0xE01D8, 4924, 0}, {0xE01D9, 4924, 0},
    {0xE01DA, 4924, 0}, {0xE01DB, 4924, 0}, {0xE01DC, 4924, 0}, {0xE01DD, 4924, 0},
    {0xE01DE, 4924, 0}, {0xE01DF, 4924, 0}, {0xE01E0, 4924, 0}, {0xE01E1, 4924, 0},
    {0xE01E2, 4924, 0}, {0xE01E3, 4924, 0}, {0xE01E4, 4924, 0}, {0xE01E5, 4924, 0},
    {0xE01E6, 4924, 0}, {0xE01E7, 4924, 0}, {0xE01E8, 4924, 0}, {0xE01E9, 4924, 0},
    {0xE01EA, 4924, 0}, {0xE01EB, 4924, 0}, {0xE01EC, 4924, 0}, {0xE01ED, 4924, 0},
    {0xE01EE, 4924, 0}, {0xE01EF, 4924, 0},
};

inline constexpr unsigned char kFoldPool[] = {
    65, 65, 65, 65, 65, 65, 67, 69, 69, 69, 69, 73, 73, 73, 73, 78,
    79, 79, 79, 79, 79, 85, 85, 85, 85, 89, 97, 97, 97, 97, 97, 97,
    99, 101, 101, 101, 101, 105, 105, 105, 105, 110, 111, 111, 111, 111, 111, 117,
    117, 117, 117, 121, 121, 65, 97, 65, 97, 65, 97, 67, 99, 67, 99, 67,
    99, 67, 99, 68, 100, 69, 101, 69, 101, 69, 101, 69, 101, 69, 101, 71,
    103, 71, 103, 71, 103, 71, 103, 72, 104, 73, 105, 73, 105, 73, 105, 73,
    105, 73, 74, 106, 75, 107, 76, 108, 76, 108, 76, 108, 78, 110, 78, 110,
    78, 110, 79, 111, 79, 111, 79, 111, 82, 114, 82, 114, 82, 114, 83, 115,
    83, 115, 83, 115, 83, 115, 84, 116, 84, 116, 85, 117, 85, 117, 85, 117,
    85, 117, 85, 117, 85, 117, 87, 119, 89, 121, 89, 90, 122, 90, 122, 90,
    122, 79, 111, 85, 117, 65, 97, 73, 105, 79, 111, 85, 117, 85, 117, 85,
    117, 85, 117, 85, 117, 65, 97, 65, 97, 195, 134, 195, 166, 71, 103, 75,
    107, 79, 111, 79, 111, 198, 183, 202, 146, 106, 71, 103, 78, 110, 65, 97,
    195, 134, 195, 166, 195, 152, 195, 184, 65, 97, 65, 97, 69, 101, 69, 101,
    73, 105, 73, 105, 79, 111, 79, 111, 82, 114, 82, 114, 85, 117, 85, 117,
    83, 115, 84, 116, 72, 104, 65, 97, 69, 101, 79, 111, 79, 111, 79, 111,
    79, 111, 89, 121, 202, 185, 59, 194, 168, 206, 145, 194, 183, 206, 149, 206,
    151, 206, 153, 206, 159, 206, 165, 206, 169, 206, 185, 206, 153, 206, 165, 206,
    177, 206, 181, 206, 183, 206, 185, 207, 133, 206, 185, 207, 133, 206, 191, 207,
    133, 207, 137, 207, 146, 207, 146, 208, 149, 208, 149, 208, 147, 208, 134, 208,
    154, 208, 152, 208, 163, 208, 152, 208, 184, 208, 181, 208, 181, 208, 179, 209,
    150, 208, 186, 208, 184, 209, 131, 209, 180, 209, 181, 208, 150, 208, 182, 208,
    144, 208, 176, 208, 144, 208, 176, 208, 149, 208, 181, 211, 152, 211, 153, 208,
    150, 208, 182, 208, 151, 208, 183, 208, 152, 208, 184, 208, 152, 208, 184, 208,
    158, 208, 190, 211, 168, 211, 169, 208, 173, 209, 141, 208, 163, 209, 131, 208,
    163, 209, 131, 208, 163, 209, 131, 208, 167, 209, 135, 208, 171, 209, 139, 216,
    167, 216, 167, 217, 136, 216, 167, 217, 138, 219, 149, 219, 129, 219, 146, 224,
    164, 168, 224, 164, 176, 224, 164, 179, 224, 164, 149, 224, 164, 150, 224, 164,
    151, 224, 164, 156, 224, 164, 161, 224, 164, 162, 224, 164, 171, 224, 164, 175,
    224, 166, 161, 224, 166, 162, 224, 166, 175, 224, 168, 178, 224, 168, 184, 224,
    168, 150, 224, 168, 151, 224, 168, 156, 224, 168, 171, 224, 173, 135, 224, 172,
    161, 224, 172, 162, 224, 179, 149, 224, 179, 149, 224, 179, 150, 224, 179, 130,
    224, 179, 130, 224, 179, 149, 224, 183, 153, 224, 183, 156, 224, 189, 130, 224,
    189, 140, 224, 189, 145, 224, 189, 150, 224, 189, 155, 224, 189, 128, 225, 128,
    165, 225, 172, 181, 225, 172, 181, 225, 172, 181, 65, 97, 66, 98, 66, 98,
    66, 98, 67, 99, 68, 100, 68, 100, 68, 100, 68, 100, 68, 100, 69, 101,
    69, 101, 69, 101, 69, 101, 69, 101, 70, 102, 71, 103, 72, 104, 72, 104,
    72, 104, 72, 104, 72, 104, 73, 105, 73, 105, 75, 107, 75, 107, 75, 107,
    76, 108, 76, 108, 76, 108, 76, 108, 77, 109, 77, 109, 77, 109, 78, 110,
    78, 110, 78, 110, 78, 110, 79, 111, 79, 111, 79, 111, 79, 111, 80, 112,
    80, 112, 82, 114, 82, 114, 82, 114, 82, 114, 83, 115, 83, 115, 83, 115,
    83, 115, 83, 115, 84, 116, 84, 116, 84, 116, 84, 116, 85, 117, 85, 117,
    85, 117, 85, 117, 85, 117, 86, 118, 86, 118, 87, 119, 87, 119, 87, 119,
    87, 119, 87, 119, 88, 120, 88, 120, 89, 121, 90, 122, 90, 122, 90, 122,
    104, 116, 119, 121, 197, 191, 65, 97, 65, 97, 65, 97, 65, 97, 65, 97,
    65, 97, 65, 97, 65, 97, 65, 97, 65, 97, 65, 97, 65, 97, 69, 101,
    69, 101, 69, 101, 69, 101, 69, 101, 69, 101, 69, 101, 69, 101, 73, 105,
    73, 105, 79, 111, 79, 111, 79, 111, 79, 111, 79, 111, 79, 111, 79, 111,
    79, 111, 79, 111, 79, 111, 79, 111, 79, 111, 85, 117, 85, 117, 85, 117,
    85, 117, 85, 117, 85, 117, 85, 117, 89, 121, 89, 121, 89, 121, 89, 121,
    206, 177, 206, 177, 206, 177, 206, 177, 206, 177, 206, 177, 206, 177, 206, 177,
    206, 145, 206, 145, 206, 145, 206, 145, 206, 145, 206, 145, 206, 145, 206, 145,
    206, 181, 206, 181, 206, 181, 206, 181, 206, 181, 206, 181, 206, 149, 206, 149,
    206, 149, 206, 149, 206, 149, 206, 149, 206, 183, 206, 183, 206, 183, 206, 183,
    206, 183, 206, 183, 206, 183, 206, 183, 206, 151, 206, 151, 206, 151, 206, 151,
    206, 151, 206, 151, 206, 151, 206, 151, 206, 185, 206, 185, 206, 185, 206, 185,
    206, 185, 206, 185, 206, 185, 206, 185, 206, 153, 206, 153, 206, 153, 206, 153,
    206, 153, 206, 153, 206, 153, 206, 153, 206, 191, 206, 191, 206, 191, 206, 191,
    206, 191, 206, 191, 206, 159, 206, 159, 206, 159, 206, 159, 206, 159, 206, 159,
    207, 133, 207, 133, 207, 133, 207, 133, 207, 133, 207, 133, 207, 133, 207, 133,
    206, 165, 206, 165, 206, 165, 206, 165, 207, 137, 207, 137, 207, 137, 207, 137,
    207, 137, 207, 137, 207, 137, 207, 137, 206, 169, 206, 169, 206, 169, 206, 169,
    206, 169, 206, 169, 206, 169, 206, 169, 206, 177, 206, 177, 206, 181, 206, 181,
    206, 183, 206, 183, 206, 185, 206, 185, 206, 191, 206, 191, 207, 133, 207, 133,
    207, 137, 207, 137, 206, 177, 206, 177, 206, 177, 206, 177, 206, 177, 206, 177,
    206, 177, 206, 177, 206, 145, 206, 145, 206, 145, 206, 145, 206, 145, 206, 145,
    206, 145, 206, 145, 206, 183, 206, 183, 206, 183, 206, 183, 206, 183, 206, 183,
    206, 183, 206, 183, 206, 151, 206, 151, 206, 151, 206, 151, 206, 151, 206, 151,
    206, 151, 206, 151, 207, 137, 207, 137, 207, 137, 207, 137, 207, 137, 207, 137,
    207, 137, 207, 137, 206, 169, 206, 169, 206, 169, 206, 169, 206, 169, 206, 169,
    206, 169, 206, 169, 206, 177, 206, 177, 206, 177, 206, 177, 206, 177, 206, 177,
    206, 177, 206, 145, 206, 145, 206, 145, 206, 145, 206, 145, 206, 185, 194, 168,
    206, 183, 206, 183, 206, 183, 206, 183, 206, 183, 206, 149, 206, 149, 206, 151,
    206, 151, 206, 151, 225, 190, 191, 225, 190, 191, 225, 190, 191, 206, 185, 206,
    185, 206, 185, 206, 185, 206, 185, 206, 185, 206, 153, 206, 153, 206, 153, 206,
    153, 225, 191, 190, 225, 191, 190, 225, 191, 190, 207, 133, 207, 133, 207, 133,
    207, 133, 207, 129, 207, 129, 207, 133, 207, 133, 206, 165, 206, 165, 206, 165,
    206, 165, 206, 161, 194, 168, 194, 168, 96, 207, 137, 207, 137, 207, 137, 207,
    137, 207, 137, 206, 159, 206, 159, 206, 169, 206, 169, 206, 169, 194, 180, 226,
    128, 130, 226, 128, 131, 206, 169, 75, 65, 226, 134, 144, 226, 134, 146, 226,
    134, 148, 226, 135, 144, 226, 135, 148, 226, 135, 146, 226, 136, 131, 226, 136,
    136, 226, 136, 139, 226, 136, 163, 226, 136, 165, 226, 136, 188, 226, 137, 131,
    226, 137, 133, 226, 137, 136, 61, 226, 137, 161, 226, 137, 141, 60, 62, 226,
    137, 164, 226, 137, 165, 226, 137, 178, 226, 137, 179, 226, 137, 182, 226, 137,
    183, 226, 137, 186, 226, 137, 187, 226, 138, 130, 226, 138, 131, 226, 138, 134,
    226, 138, 135, 226, 138, 162, 226, 138, 168, 226, 138, 169, 226, 138, 171, 226,
    137, 188, 226, 137, 189, 226, 138, 145, 226, 138, 146, 226, 138, 178, 226, 138,
    179, 226, 138, 180, 226, 138, 181, 227, 128, 136, 227, 128, 137, 226, 171, 157,
    227, 129, 139, 227, 129, 141, 227, 129, 143, 227, 129, 145, 227, 129, 147, 227,
    129, 149, 227, 129, 151, 227, 129, 153, 227, 129, 155, 227, 129, 157, 227, 129,
    159, 227, 129, 161, 227, 129, 164, 227, 129, 166, 227, 129, 168, 227, 129, 175,
    227, 129, 175, 227, 129, 178, 227, 129, 178, 227, 129, 181, 227, 129, 181, 227,
    129, 184, 227, 129, 184, 227, 129, 187, 227, 129, 187, 227, 129, 134, 227, 130,
    157, 227, 130, 171, 227, 130, 173, 227, 130, 175, 227, 130, 177, 227, 130, 179,
    227, 130, 181, 227, 130, 183, 227, 130, 185, 227, 130, 187, 227, 130, 189, 227,
    130, 191, 227, 131, 129, 227, 131, 132, 227, 131, 134, 227, 131, 136, 227, 131,
    143, 227, 131, 143, 227, 131, 146, 227, 131, 146, 227, 131, 149, 227, 131, 149,
    227, 131, 152, 227, 131, 152, 227, 131, 155, 227, 131, 155, 227, 130, 166, 227,
    131, 175, 227, 131, 176, 227, 131, 177, 227, 131, 178, 227, 131, 189, 232, 177,
    136, 230, 155, 180, 232, 187, 138, 232, 179, 136, 230, 187, 145, 228, 184, 178,
    229, 143, 165, 233, 190, 156, 233, 190, 156, 229, 165, 145, 233, 135, 145, 229,
    150, 135, 229, 165, 136, 230, 135, 182, 231, 153, 169, 231, 190, 133, 232, 152,
    191, 232, 158, 186, 232, 163, 184, 233, 130, 143, 230, 168, 130, 230, 180, 155,
    231, 131, 153, 231, 143, 158, 232, 144, 189, 233, 133, 170, 233, 167, 177, 228,
    186, 130, 229, 141, 181, 230, 172, 132, 231, 136, 155, 232, 152, 173, 233, 184,
    158, 229, 181, 144, 230, 191, 171, 232, 151, 141, 232, 165, 164, 230, 139, 137,
    232, 135, 152, 232, 160, 159, 229, 187, 138, 230, 156, 151, 230, 181, 170, 231,
    139, 188, 233, 131, 142, 228, 190, 134, 229, 134, 183, 229, 139, 158, 230, 147,
    132, 230, 171, 147, 231, 136, 144, 231, 155, 167, 232, 128, 129, 232, 152, 134,
    232, 153, 156, 232, 183, 175, 233, 156, 178, 233, 173, 175, 233, 183, 186, 231,
    162, 140, 231, 165, 191, 231, 182, 160, 232, 143, 137, 233, 140, 132, 233, 185,
    191, 232, 171, 150, 229, 163, 159, 229, 188, 132, 231, 177, 160, 232, 129, 190,
    231, 137, 162, 231, 163, 138, 232, 179, 130, 233, 155, 183, 229, 163, 152, 229,
    177, 162, 230, 168, 147, 230, 183, 154, 230, 188, 143, 231, 180, 175, 231, 184,
    183, 233, 153, 139, 229, 139, 146, 232, 130, 139, 229, 135, 156, 229, 135, 140,
    231, 168, 156, 231, 182, 190, 232, 143, 177, 233, 153, 181, 232, 174, 128, 230,
    139, 143, 230, 168, 130, 232, 171, 190, 228, 184, 185, 229, 175, 167, 230, 128,
    146, 231, 142, 135, 231, 149, 176, 229, 140, 151, 231, 163, 187, 228, 190, 191,
    229, 190, 169, 228, 184, 141, 230, 179, 140, 230, 149, 184, 231, 180, 162, 229,
    143, 131, 229, 161, 158, 231, 156, 129, 232, 145, 137, 232, 170, 170, 230, 174,
    186, 232, 190, 176, 230, 178, 136, 230, 139, 190, 232, 139, 165, 230, 142, 160,
    231, 149, 165, 228, 186, 174, 229, 133, 169, 229, 135, 137, 230, 162, 129, 231,
    179, 167, 232, 137, 175, 232, 171, 146, 233, 135, 143, 229, 139, 181, 229, 145,
    130, 229, 165, 179, 229, 187, 172, 230, 151, 133, 230, 191, 190, 231, 164, 170,
    233, 150, 173, 233, 169, 170, 233, 186, 151, 233, 187, 142, 229, 138, 155, 230,
    155, 134, 230, 173, 183, 232, 189, 162, 229, 185, 180, 230, 134, 144, 230, 136,
    128, 230, 146, 154, 230, 188, 163, 231, 133, 137, 231, 146, 137, 231, 167, 138,
    231, 183, 180, 232, 129, 175, 232, 188, 166, 232, 147, 174, 233, 128, 163, 233,
    141, 138, 229, 136, 151, 229, 138, 163, 229, 146, 189, 231, 131, 136, 232, 163,
    130, 232, 170, 170, 229, 187, 137, 229, 191, 181, 230, 141, 187, 230, 174, 174,
    231, 176, 190, 231, 141, 181, 228, 187, 164, 229, 155, 185, 229, 175, 167, 229,
    182, 186, 230, 128, 156, 231, 142, 178, 231, 145, 169, 231, 190, 154, 232, 129,
    134, 233, 136, 180, 233, 155, 182, 233, 157, 136, 233, 160, 152, 228, 190, 139,
    231, 166, 174, 233, 134, 180, 233, 154, 184, 230, 131, 161, 228, 186, 134, 229,
    131, 154, 229, 175, 174, 229, 176, 191, 230, 150, 153, 230, 168, 130, 231, 135,
    142, 231, 153, 130, 232, 147, 188, 233, 129, 188, 233, 190, 141, 230, 154, 136,
    233, 152, 174, 229, 138, 137, 230, 157, 187, 230, 159, 179, 230, 181, 129, 230,
    186, 156, 231, 144, 137, 231, 149, 153, 231, 161, 171, 231, 180, 144, 233, 161,
    158, 229, 133, 173, 230, 136, 174, 233, 153, 184, 229, 128, 171, 229, 180, 153,
    230, 183, 170, 232, 188, 170, 229, 190, 139, 230, 133, 132, 230, 160, 151, 231,
    142, 135, 233, 154, 134, 229, 136, 169, 229, 144, 143, 229, 177, 165, 230, 152,
    147, 230, 157, 142, 230, 162, 168, 230, 179, 165, 231, 144, 134, 231, 151, 162,
    231, 189, 185, 232, 163, 143, 232, 163, 161, 233, 135, 140, 233, 155, 162, 229,
    140, 191, 230, 186, 186, 229, 144, 157, 231, 135, 144, 231, 146, 152, 232, 151,
    186, 233, 154, 163, 233, 177, 151, 233, 186, 159, 230, 158, 151, 230, 183, 139,
    232, 135, 168, 231, 171, 139, 231, 172, 160, 231, 178, 146, 231, 139, 128, 231,
    130, 153, 232, 173, 152, 228, 187, 128, 232, 140, 182, 229, 136, 186, 229, 136,
    135, 229, 186, 166, 230, 139, 147, 231, 179, 150, 229, 174, 133, 230, 180, 158,
    230, 154, 180, 232, 188, 187, 232, 161, 140, 233, 153, 141, 232, 166, 139, 229,
    187, 147, 229, 133, 128, 229, 151, 128, 229, 161, 154, 230, 153, 180, 229, 135,
    158, 231, 140, 170, 231, 155, 138, 231, 164, 188, 231, 165, 158, 231, 165, 165,
    231, 166, 143, 233, 157, 150, 231, 178, 190, 231, 190, 189, 232, 152, 146, 232,
    171, 184, 233, 128, 184, 233, 131, 189, 233, 163, 175, 233, 163, 188, 233, 164,
    168, 233, 182, 180, 233, 131, 158, 233, 154, 183, 228, 190, 174, 229, 131, 167,
    229, 133, 141, 229, 139, 137, 229, 139, 164, 229, 141, 145, 229, 150, 157, 229,
    152, 134, 229, 153, 168, 229, 161, 128, 229, 162, 168, 229, 177, 164, 229, 177,
    174, 230, 130, 148, 230, 133, 168, 230, 134, 142, 230, 135, 178, 230, 149, 143,
    230, 151, 162, 230, 154, 145, 230, 162, 133, 230, 181, 183, 230, 184, 154, 230,
    188, 162, 231, 133, 174, 231, 136, 171, 231, 144, 162, 231, 162, 145, 231, 164,
    190, 231, 165, 137, 231, 165, 136, 231, 165, 144, 231, 165, 150, 231, 165, 157,
    231, 166, 141, 231, 166, 142, 231, 169, 128, 231, 170, 129, 231, 175, 128, 231,
    183, 180, 231, 184, 137, 231, 185, 129, 231, 189, 178, 232, 128, 133, 232, 135,
    173, 232, 137, 185, 232, 137, 185, 232, 145, 151, 232, 164, 144, 232, 166, 150,
    232, 172, 129, 232, 172, 185, 232, 179, 147, 232, 180, 136, 232, 190, 182, 233,
    128, 184, 233, 155, 163, 233, 159, 191, 233, 160, 187, 230, 129, 181, 240, 164,
    139, 174, 232, 136, 152, 228, 184, 166, 229, 134, 181, 229, 133, 168, 228, 190,
    128, 229, 133, 133, 229, 134, 128, 229, 139, 135, 229, 139, 186, 229, 150, 157,
    229, 149, 149, 229, 150, 153, 229, 151, 162, 229, 161, 154, 229, 162, 179, 229,
    165, 132, 229, 165, 148, 229, 169, 162, 229, 172, 168, 229, 187, 146, 229, 187,
    153, 229, 189, 169, 229, 190, 173, 230, 131, 152, 230, 133, 142, 230, 132, 136,
    230, 134, 142, 230, 133, 160, 230, 135, 178, 230, 136, 180, 230, 143, 132, 230,
    144, 156, 230, 145, 146, 230, 149, 150, 230, 153, 180, 230, 156, 151, 230, 156,
    155, 230, 157, 150, 230, 173, 185, 230, 174, 186, 230, 181, 129, 230, 187, 155,
    230, 187, 139, 230, 188, 162, 231, 128, 158, 231, 133, 174, 231, 158, 167, 231,
    136, 181, 231, 138, 175, 231, 140, 170, 231, 145, 177, 231, 148, 134, 231, 148,
    187, 231, 152, 157, 231, 152, 159, 231, 155, 138, 231, 155, 155, 231, 155, 180,
    231, 157, 138, 231, 157, 128, 231, 163, 140, 231, 170, 177, 231, 175, 128, 231,
    177, 187, 231, 181, 155, 231, 183, 180, 231, 188, 190, 232, 128, 133, 232, 141,
    146, 232, 143, 175, 232, 157, 185, 232, 165, 129, 232, 166, 134, 232, 166, 150,
    232, 170, 191, 232, 171, 184, 232, 171, 139, 232, 172, 129, 232, 171, 190, 232,
    171, 173, 232, 172, 185, 232, 174, 138, 232, 180, 136, 232, 188, 184, 233, 129,
    178, 233, 134, 153, 233, 137, 182, 233, 153, 188, 233, 155, 163, 233, 157, 150,
    233, 159, 155, 233, 159, 191, 233, 160, 139, 233, 160, 187, 233, 172, 146, 233,
    190, 156, 240, 162, 161, 138, 240, 162, 161, 132, 240, 163, 143, 149, 227, 174,
    157, 228, 128, 152, 228, 128, 185, 240, 165, 137, 137, 240, 165, 179, 144, 240,
    167, 187, 147, 233, 189, 131, 233, 190, 142, 215, 153, 215, 178, 215, 169, 215,
    169, 215, 169, 215, 169, 215, 144, 215, 144, 215, 144, 215, 145, 215, 146, 215,
    147, 215, 148, 215, 149, 215, 150, 215, 152, 215, 153, 215, 154, 215, 155, 215,
    156, 215, 158, 215, 160, 215, 161, 215, 163, 215, 164, 215, 166, 215, 167, 215,
    168, 215, 169, 215, 170, 215, 149, 215, 145, 215, 155, 215, 164, 240, 145, 130,
    153, 240, 145, 130, 155, 240, 145, 130, 165, 240, 145, 146, 185, 240, 157, 133,
    151, 240, 157, 133, 165, 240, 157, 133, 152, 240, 157, 133, 165, 240, 157, 133,
    152, 240, 157, 133, 165, 240, 157, 133, 174, 240, 157, 133, 152, 240, 157, 133,
    165, 240, 157, 133, 175, 240, 157, 133, 152, 240, 157, 133, 165, 240, 157, 133,
    176, 240, 157, 133, 152, 240, 157, 133, 165, 240, 157, 133, 177, 240, 157, 133,
    152, 240, 157, 133, 165, 240, 157, 133, 178, 240, 157, 134, 185, 240, 157, 133,
    165, 240, 157, 134, 186, 240, 157, 133, 165, 240, 157, 134, 185, 240, 157, 133,
    165, 240, 157, 133, 174, 240, 157, 134, 186, 240, 157, 133, 165, 240, 157, 133,
    174, 240, 157, 134, 185, 240, 157, 133, 165, 240, 157, 133, 175, 240, 157, 134,
    186, 240, 157, 133, 165, 240, 157, 133, 175, 228, 184, 189, 228, 184, 184, 228,
    185, 129, 240, 160, 132, 162, 228, 189, 160, 228, 190, 174, 228, 190, 187, 229,
    128, 130, 229, 129, 186, 229, 130, 153, 229, 131, 167, 229, 131, 143, 227, 146,
    158, 240, 160, 152, 186, 229, 133, 141, 229, 133, 148, 229, 133, 164, 229, 133,
    183, 240, 160, 148, 156, 227, 146, 185, 229, 133, 167, 229, 134, 141, 240, 160,
    149, 139, 229, 134, 151, 229, 134, 164, 228, 187, 140, 229, 134, 172, 229, 134,
    181, 240, 169, 135, 159, 229, 135, 181, 229, 136, 131, 227, 147, 159, 229, 136,
    187, 229, 137, 134, 229, 137, 178, 229, 137, 183, 227, 148, 149, 229, 139, 135,
    229, 139, 137, 229, 139, 164, 229, 139, 186, 229, 140, 133, 229, 140, 134, 229,
    140, 151, 229, 141, 137, 229, 141, 145, 229, 141, 154, 229, 141, 179, 229, 141,
    189, 229, 141, 191, 229, 141, 191, 229, 141, 191, 240, 160, 168, 172, 231, 129,
    176, 229, 143, 138, 229, 143, 159, 240, 160, 173, 163, 229, 143, 171, 229, 143,
    177, 229, 144, 134, 229, 146, 158, 229, 144, 184, 229, 145, 136, 229, 145, 168,
    229, 146, 162, 229, 147, 182, 229, 148, 144, 229, 149, 147, 229, 149, 163, 229,
    150, 132, 229, 150, 132, 229, 150, 153, 229, 150, 171, 229, 150, 179, 229, 151,
    130, 229, 156, 150, 229, 152, 134, 229, 156, 151, 229, 153, 145, 229, 153, 180,
    229, 136, 135, 229, 163, 174, 229, 159, 142, 229, 159, 180, 229, 160, 141, 229,
    158, 139, 229, 160, 178, 229, 160, 177, 229, 162, 172, 240, 161, 147, 164, 229,
    163, 178, 229, 163, 183, 229, 164, 134, 229, 164, 154, 229, 164, 162, 229, 165,
    162, 240, 161, 154, 168, 240, 161, 155, 170, 229, 167, 172, 229, 168, 155, 229,
    168, 167, 229, 167, 152, 229, 169, 166, 227, 155, 174, 227, 155, 188, 229, 172,
    136, 229, 172, 190, 229, 172, 190, 240, 161, 167, 136, 229, 175, 131, 229, 175,
    152, 229, 175, 167, 229, 175, 179, 240, 161, 172, 152, 229, 175, 191, 229, 176,
    134, 229, 189, 147, 229, 176, 162, 227, 158, 129, 229, 177, 160, 229, 177, 174,
    229, 179, 128, 229, 178, 141, 240, 161, 183, 164, 229, 181, 131, 240, 161, 183,
    166, 229, 181, 174, 229, 181, 171, 229, 181, 188, 229, 183, 161, 229, 183, 162,
    227, 160, 175, 229, 183, 189, 229, 184, 168, 229, 184, 189, 229, 185, 169, 227,
    161, 162, 240, 162, 134, 131, 227, 161, 188, 229, 186, 176, 229, 186, 179, 229,
    186, 182, 229, 187, 138, 240, 170, 142, 146, 229, 187, 190, 240, 162, 140, 177,
    240, 162, 140, 177, 232, 136, 129, 229, 188, 162, 229, 188, 162, 227, 163, 135,
    240, 163, 138, 184, 240, 166, 135, 154, 229, 189, 162, 229, 189, 171, 227, 163,
    163, 229, 190, 154, 229, 191, 141, 229, 191, 151, 229, 191, 185, 230, 130, 129,
    227, 164, 186, 227, 164, 156, 230, 130, 148, 240, 162, 155, 148, 230, 131, 135,
    230, 133, 136, 230, 133, 140, 230, 133, 142, 230, 133, 140, 230, 133, 186, 230,
    134, 142, 230, 134, 178, 230, 134, 164, 230, 134, 175, 230, 135, 158, 230, 135,
    178, 230, 135, 182, 230, 136, 144, 230, 136, 155, 230, 137, 157, 230, 138, 177,
    230, 139, 148, 230, 141, 144, 240, 162, 172, 140, 230, 140, 189, 230, 139, 188,
    230, 141, 168, 230, 142, 131, 230, 143, 164, 240, 162, 175, 177, 230, 144, 162,
    230, 143, 133, 230, 142, 169, 227, 168, 174, 230, 145, 169, 230, 145, 190, 230,
    146, 157, 230, 145, 183, 227, 169, 172, 230, 149, 143, 230, 149, 172, 240, 163,
    128, 138, 230, 151, 163, 230, 155, 184, 230, 153, 137, 227, 172, 153, 230, 154,
    145, 227, 172, 136, 227, 171, 164, 229, 134, 146, 229, 134, 149, 230, 156, 128,
    230, 154, 156, 232, 130, 173, 228, 143, 153, 230, 156, 151, 230, 156, 155, 230,
    156, 161, 230, 157, 158, 230, 157, 147, 240, 163, 143, 131, 227, 173, 137, 230,
    159, 186, 230, 158, 133, 230, 161, 146, 230, 162, 133, 240, 163, 145, 173, 230,
    162, 142, 230, 160, 159, 230, 164, 148, 227, 174, 157, 230, 165, 130, 230, 166,
    163, 230, 167, 170, 230, 170, 168, 240, 163, 154, 163, 230, 171, 155, 227, 176,
    152, 230, 172, 161, 240, 163, 162, 167, 230, 173, 148, 227, 177, 142, 230, 173,
    178, 230, 174, 159, 230, 174, 186, 230, 174, 187, 240, 163, 170, 141, 240, 161,
    180, 139, 240, 163, 171, 186, 230, 177, 142, 240, 163, 178, 188, 230, 178, 191,
    230, 179, 141, 230, 177, 167, 230, 180, 150, 230, 180, 190, 230, 181, 183, 230,
    181, 129, 230, 181, 169, 230, 181, 184, 230, 182, 133, 240, 163, 180, 158, 230,
    180, 180, 230, 184, 175, 230, 185, 174, 227, 180, 179, 230, 187, 139, 230, 187,
    135, 240, 163, 187, 145, 230, 183, 185, 230, 189, 174, 240, 163, 189, 158, 240,
    163, 190, 142, 230, 191, 134, 231, 128, 185, 231, 128, 158, 231, 128, 155, 227,
    182, 150, 231, 129, 138, 231, 129, 189, 231, 129, 183, 231, 130, 173, 240, 160,
    148, 165, 231, 133, 133, 240, 164, 137, 163, 231, 134, 156, 240, 164, 142, 171,
    231, 136, 168, 231, 136, 181, 231, 137, 144, 240, 164, 152, 136, 231, 138, 128,
    231, 138, 149, 240, 164, 156, 181, 240, 164, 160, 148, 231, 141, 186, 231, 142,
    139, 227, 186, 172, 231, 142, 165, 227, 186, 184, 227, 186, 184, 231, 145, 135,
    231, 145, 156, 231, 145, 177, 231, 146, 133, 231, 147, 138, 227, 188, 155, 231,
    148, 164, 240, 164, 176, 182, 231, 148, 190, 240, 164, 178, 146, 231, 149, 176,
    240, 162, 134, 159, 231, 152, 144, 240, 164, 190, 161, 240, 164, 190, 184, 240,
    165, 129, 132, 227, 191, 188, 228, 128, 136, 231, 155, 180, 240, 165, 131, 179,
    240, 165, 131, 178, 240, 165, 132, 153, 240, 165, 132, 179, 231, 156, 158, 231,
    156, 159, 231, 156, 159, 231, 157, 138, 228, 128, 185, 231, 158, 139, 228, 129,
    134, 228, 130, 150, 240, 165, 144, 157, 231, 161, 142, 231, 162, 140, 231, 163,
    140, 228, 131, 163, 240, 165, 152, 166, 231, 165, 150, 240, 165, 154, 154, 240,
    165, 155, 133, 231, 166, 143, 231, 167, 171, 228, 132, 175, 231, 169, 128, 231,
    169, 138, 231, 169, 143, 240, 165, 165, 188, 240, 165, 170, 167, 240, 165, 170,
    167, 231, 171, 174, 228, 136, 130, 240, 165, 174, 171, 231, 175, 134, 231, 175,
    137, 228, 136, 167, 240, 165, 178, 128, 231, 179, 146, 228, 138, 160, 231, 179,
    168, 231, 179, 163, 231, 180, 128, 240, 165, 190, 134, 231, 181, 163, 228, 140,
    129, 231, 183, 135, 231, 184, 130, 231, 185, 133, 228, 140, 180, 240, 166, 136,
    168, 240, 166, 137, 135, 228, 141, 153, 240, 166, 139, 153, 231, 189, 186, 240,
    166, 140, 190, 231, 190, 149, 231, 191, 186, 232, 128, 133, 240, 166, 147, 154,
    240, 166, 148, 163, 232, 129, 160, 240, 166, 150, 168, 232, 129, 176, 240, 163,
    141, 159, 228, 143, 149, 232, 130, 178, 232, 132, 131, 228, 144, 139, 232, 132,
    190, 229, 170, 181, 240, 166, 158, 167, 240, 166, 158, 181, 240, 163, 142, 147,
    240, 163, 142, 156, 232, 136, 129, 232, 136, 132, 232, 190, 158, 228, 145, 171,
    232, 138, 145, 232, 138, 139, 232, 138, 157, 229, 138, 179, 232, 138, 177, 232,
    138, 179, 232, 138, 189, 232, 139, 166, 240, 166, 172, 188, 232, 139, 165, 232,
    140, 157, 232, 141, 163, 232, 142, 173, 232, 140, 163, 232, 142, 189, 232, 143,
    167, 232, 145, 151, 232, 141, 147, 232, 143, 138, 232, 143, 140, 232, 143, 156,
    240, 166, 176, 182, 240, 166, 181, 171, 240, 166, 179, 149, 228, 148, 171, 232,
    147, 177, 232, 147, 179, 232, 148, 150, 240, 167, 143, 138, 232, 149, 164, 240,
    166, 188, 172, 228, 149, 157, 228, 149, 161, 240, 166, 190, 177, 240, 167, 131,
    146, 228, 149, 171, 232, 153, 144, 232, 153, 156, 232, 153, 167, 232, 153, 169,
    232, 154, 169, 232, 154, 136, 232, 156, 142, 232, 155, 162, 232, 157, 185, 232,
    156, 168, 232, 157, 171, 232, 158, 134, 228, 151, 151, 232, 159, 161, 232, 160,
    129, 228, 151, 185, 232, 161, 160, 232, 161, 163, 240, 167, 153, 167, 232, 163,
    151, 232, 163, 158, 228, 152, 181, 232, 163, 186, 227, 146, 187, 240, 167, 162,
    174, 240, 167, 165, 166, 228, 154, 190, 228, 155, 135, 232, 170, 160, 232, 171,
    173, 232, 174, 138, 232, 177, 149, 240, 167, 178, 168, 232, 178, 171, 232, 179,
    129, 232, 180, 155, 232, 181, 183, 240, 167, 188, 175, 240, 160, 160, 132, 232,
    183, 139, 232, 182, 188, 232, 183, 176, 240, 160, 163, 158, 232, 187, 148, 232,
    188, 184, 240, 168, 151, 146, 240, 168, 151, 173, 233, 130, 148, 233, 131, 177,
    233, 132, 145, 240, 168, 156, 174, 233, 132, 155, 233, 136, 184, 233, 139, 151,
    233, 139, 152, 233, 137, 188, 233, 143, 185, 233, 144, 149, 240, 168, 175, 186,
    233, 150, 139, 228, 166, 149, 233, 150, 183, 240, 168, 181, 183, 228, 167, 166,
    233, 155, 131, 229, 182, 178, 233, 156, 163, 240, 169, 133, 133, 240, 169, 136,
    154, 228, 169, 174, 228, 169, 182, 233, 159, 160, 240, 169, 144, 138, 228, 170,
    178, 240, 169, 146, 150, 233, 160, 139, 233, 160, 139, 233, 160, 169, 240, 169,
    150, 182, 233, 163, 162, 228, 172, 179, 233, 164, 169, 233, 166, 167, 233, 167,
    130, 233, 167, 190, 228, 175, 142, 240, 169, 172, 176, 233, 172, 146, 233, 177,
    128, 233, 179, 189, 228, 179, 142, 228, 179, 173, 233, 181, 167, 240, 170, 131,
    142, 228, 179, 184, 240, 170, 132, 133, 240, 170, 136, 142, 240, 170, 138, 145,
    233, 186, 187, 228, 181, 150, 233, 187, 185, 233, 187, 190, 233, 188, 133, 233,
    188, 143, 233, 188, 150, 233, 188, 187, 240, 170, 152, 128,
};

}  // namespace deskbert::unicode_tables
